#include "dicol/graph6.hpp"

#include <vector>

namespace dicol {

const char* to_string(ParseErrc e) {
  switch (e) {
    case ParseErrc::bad_length_field: return "bad length field";
    case ParseErrc::char_out_of_range: return "character out of range";
    case ParseErrc::wrong_length: return "wrong length";
    case ParseErrc::nonzero_padding: return "nonzero padding bits";
    case ParseErrc::bad_prefix: return "bad prefix";
    case ParseErrc::schema: return "schema violation";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(ParseErrc kind, const std::string& detail) {
  throw ParseError(kind, std::string(to_string(kind)) + ": " + detail);
}

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((static_cast<long long>(n) >> shift) & 63)));
  }
}

void put_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      v <<= 1;
      if (i + j < bits.size() && bits[i + j]) v |= 1;
    }
    out.push_back(static_cast<char>(63 + v));
  }
}

std::string_view strip(std::string_view line, std::string_view header) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  return line;
}

int sixbits(char c) {
  if (c < 63 || c > 126) fail(ParseErrc::char_out_of_range, std::string("byte ") + std::to_string(static_cast<unsigned char>(c)));
  return c - 63;
}

// Reads N(n); advances pos.
long long read_size(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) fail(ParseErrc::bad_length_field, "empty");
  if (s[pos] != '~') return sixbits(s[pos++]);
  ++pos;
  int groups = 3;
  if (pos < s.size() && s[pos] == '~') {
    ++pos;
    groups = 6;
  }
  if (pos + groups > s.size()) fail(ParseErrc::bad_length_field, "truncated");
  long long n = 0;
  for (int i = 0; i < groups; ++i) n = (n << 6) | sixbits(s[pos++]);
  if (groups == 3 && n <= 62) fail(ParseErrc::bad_length_field, "non-minimal size field");
  if (groups == 6 && n <= 258047) fail(ParseErrc::bad_length_field, "non-minimal size field");
  return n;
}

std::vector<bool> read_bits(std::string_view s, std::size_t pos, std::size_t count) {
  std::size_t chars = (count + 5) / 6;
  if (s.size() - pos != chars)
    fail(ParseErrc::wrong_length, "expected " + std::to_string(chars) + " data bytes, got " + std::to_string(s.size() - pos));
  std::vector<bool> bits(chars * 6);
  for (std::size_t i = 0; i < chars; ++i) {
    int v = sixbits(s[pos + i]);
    for (int j = 0; j < 6; ++j) bits[i * 6 + j] = (v >> (5 - j)) & 1;
  }
  for (std::size_t i = count; i < bits.size(); ++i)
    if (bits[i]) fail(ParseErrc::nonzero_padding, "trailing bits set");
  bits.resize(count);
  return bits;
}

int checked_order(long long n) {
  if (n > kMaxVertices) throw LimitExceeded("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  return static_cast<int>(n);
}

}  // namespace

std::string encode_graph6(const UndirectedGraph& g) {
  int n = g.order();
  std::string out;
  put_size(out, n);
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  put_bits(out, bits);
  return out;
}

std::string encode_digraph6(const Digraph& d) {
  int n = d.order();
  std::string out = "&";
  put_size(out, n);
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bits.push_back(d.has_arc(i, j));
  put_bits(out, bits);
  return out;
}

UndirectedGraph decode_graph6(std::string_view line) {
  auto s = strip(line, ">>graph6<<");
  if (!s.empty() && (s[0] == '&' || s[0] == ':' || s[0] == ';')) fail(ParseErrc::bad_prefix, "not a graph6 line");
  std::size_t pos = 0;
  int n = checked_order(read_size(s, pos));
  auto bits = read_bits(s, pos, static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  UndirectedGraph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[k++]) g.add_edge(i, j);
  return g;
}

Digraph decode_digraph6(std::string_view line) {
  auto s = strip(line, ">>digraph6<<");
  if (s.empty() || s[0] != '&') fail(ParseErrc::bad_prefix, "digraph6 line must start with '&'");
  std::size_t pos = 1;
  int n = checked_order(read_size(s, pos));
  auto bits = read_bits(s, pos, static_cast<std::size_t>(n) * n);
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bits[static_cast<std::size_t>(i) * n + j]) {
        if (i == j) throw InvalidArgument("digraph6: loop at vertex " + std::to_string(i));
        d.add_arc(i, j);
      }
  return d;
}

bool is_digraph6(std::string_view line) {
  auto s = strip(line, ">>digraph6<<");
  return !s.empty() && s[0] == '&';
}

}  // namespace dicol
