#include "jacobi/support.hpp"

#include <algorithm>
#include <set>

#include "jacobi/error.hpp"

namespace jacobi {

bool Support::all_intervals() const {
  return std::all_of(components.begin(), components.end(),
                     [](ComponentKind k) { return k == ComponentKind::Interval; });
}

int Support::color_index(std::string_view label) const {
  for (int i = 0; i < num_colors(); ++i)
    if (colors[i] == label) return i;
  return -1;
}

void Support::check() const {
  std::set<std::string> seen;
  for (const auto& c : colors) {
    if (c.empty()) throw DomainError("empty color label");
    if (!seen.insert(c).second) throw DomainError("duplicate color label '" + c + "'");
  }
}

std::string Support::to_string() const {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ',';
  };
  for (auto k : components) {
    sep();
    out += k == ComponentKind::Interval ? "I" : "S1";
  }
  for (const auto& c : colors) {
    sep();
    out += "c:" + c;
  }
  return out.empty() ? std::string("-") : out;
}

static std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Support Support::parse(std::string_view text) {
  Support s;
  text = trim(text);
  if (text == "-" || text.empty()) return s;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = trim(text.substr(pos, next - pos));
    if (tok == "I") {
      s.components.push_back(ComponentKind::Interval);
    } else if (tok == "S1") {
      s.components.push_back(ComponentKind::Circle);
    } else if (tok == "B") {
      s.colors.emplace_back("x");
    } else if (tok.size() > 1 && tok[0] == 'P' &&
               std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int r = std::stoi(std::string(tok.substr(1)));
      for (int i = 0; i < r; ++i) s.components.push_back(ComponentKind::Interval);
    } else if (tok.size() > 2 && tok.substr(0, 2) == "c:") {
      s.colors.emplace_back(tok.substr(2));
    } else {
      throw ParseError("unknown support token '" + std::string(tok) + "'", 1, static_cast<int>(pos) + 1);
    }
    pos = next + 1;
  }
  s.check();
  return s;
}

}  // namespace jacobi
