#pragma once

#include <string>
#include <string_view>

#include "dicol/error.hpp"
#include "dicol/graph.hpp"

namespace dicol {

enum class ParseErrc {
  bad_length_field,
  char_out_of_range,
  wrong_length,
  nonzero_padding,
  bad_prefix,
  schema,
};

const char* to_string(ParseErrc e);

class ParseError : public Error {
 public:
  ParseError(ParseErrc kind, const std::string& what) : Error(Errc::parse, what), kind_(kind) {}
  ParseErrc kind() const noexcept { return kind_; }

 private:
  ParseErrc kind_;
};

// nauty graph6 / digraph6 line formats. Decoders accept an optional
// ">>graph6<<" / ">>digraph6<<" header and ignore a trailing newline.
std::string encode_graph6(const UndirectedGraph& g);
std::string encode_digraph6(const Digraph& d);
UndirectedGraph decode_graph6(std::string_view line);
Digraph decode_digraph6(std::string_view line);

// True when the line (after any header) starts with '&'.
bool is_digraph6(std::string_view line);

}  // namespace dicol
