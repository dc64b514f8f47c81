#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pdesign/embedding.hpp"
#include "pdesign/structure.hpp"

namespace pdesign {

/// Design text format, one structure per file:
///   line 1: `k t lambda n`
///   line 2: optional `order v0 v1 ... v(n-1)` (absent means natural order)
///   then one block per line, k ascending vertex ids, lines lex-sorted.
/// write_design emits the canonical encoding: two files are byte-equal iff
/// the ordered designs are equal.
OrderedDesign read_design(std::istream& in);
OrderedDesign read_design_file(const std::string& path);
std::string write_design(const OrderedDesign& design);
void write_design_file(const std::string& path, const OrderedDesign& design);

/// Structure text: the design header plus the explicit function table,
///   blocks <m>      followed by m block lines
///   functions <q>   followed by q lines `F <l> t1 .. tt -> w1 .. wl`.
std::string write_structure(const OrderedStructure& structure);
OrderedStructure read_structure(std::istream& in);
OrderedStructure read_structure_file(const std::string& path);

/// Map files: one `a -> b` line per source vertex.
VertexMap read_map(std::istream& in, int source_size);
VertexMap read_map_file(const std::string& path, int source_size);
std::string write_map(const VertexMap& map);

} // namespace pdesign
