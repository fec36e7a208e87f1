#include <stdexcept>

#include "freezelab/core.hpp"

namespace freezelab::core {

std::vector<Symbol> split_code_points(std::string_view text) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (c >= 0xF0) {
      len = 4;
    } else if (c >= 0xE0) {
      len = 3;
    } else if (c >= 0xC0) {
      len = 2;
    }
    if (i + len > text.size()) throw std::invalid_argument("truncated UTF-8 sequence");
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must be non-empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw std::invalid_argument("empty symbol");
    if (!index_.emplace(symbols_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate symbol: " + symbols_[i]);
  }
}

Alphabet Alphabet::from_chars(std::string_view chars) { return Alphabet(split_code_points(chars)); }

std::optional<int> Alphabet::index(const Symbol& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace freezelab::core
