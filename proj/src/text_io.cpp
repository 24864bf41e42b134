#include "qmaj/text_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qmaj {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw std::invalid_argument("malformed integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && ((s.front() == '(' && s.back() == ')') ||
                     (s.front() == '[' && s.back() == ']'))) {
    s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string_view token =
        comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
    out.push_back(parse_int(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation::from_one_line(parse_int_list(text));
}

Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

std::string format_int_list(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  out += ")";
  return out;
}

std::string format_qpoly(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = 0; d <= *p.degree(); ++d) {
    const QPoly::Coeff c = p.coeff(d);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const QPoly::Coeff mag = c < 0 ? -c : c;
    if (d == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << "q";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

std::string format_two_row(const LabeledPartition& lp) {
  const int n = lp.pi.size();
  std::vector<std::string> top(static_cast<std::size_t>(n)), bottom(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    top[static_cast<std::size_t>(i) - 1] = std::to_string(lp.mu.part(i));
    bottom[static_cast<std::size_t>(i) - 1] = std::to_string(lp.pi.value(i));
  }
  std::string row1 = "(", row2 = "(";
  for (int i = 0; i < n; ++i) {
    const std::size_t w = std::max(top[static_cast<std::size_t>(i)].size(),
                                   bottom[static_cast<std::size_t>(i)].size());
    row1 += " " + std::string(w - top[static_cast<std::size_t>(i)].size(), ' ') +
            top[static_cast<std::size_t>(i)];
    row2 += " " + std::string(w - bottom[static_cast<std::size_t>(i)].size(), ' ') +
            bottom[static_cast<std::size_t>(i)];
  }
  row1 += " )";
  row2 += " )";
  return row1 + "\n" + row2;
}

}  // namespace qmaj
