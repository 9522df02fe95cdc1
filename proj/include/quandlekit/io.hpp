#pragma once

#include <string>
#include <utility>

#include <Eigen/Core>

#include "quandlekit/diagram.hpp"
#include "quandlekit/homology.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

// Plain text formats, LF line endings, no trailing spaces.  Lines whose
// first non-blank character is '#' are comments; serializers never emit
// them, so serialize(parse(file)) == file for comment-free canonical files.
//
//   quandle <name> <n>     followed by n rows of n entries
//   group <name> <n>       same table shape, group multiplication
//   cocycle <quandle-name> <group-spec>   then one "x y a" line per
//                          nonzero value, sorted by (x, y)
//   link <name> / arcs <n> / "x <+|-> over=<a> in=<b> out=<c>" lines /
//                          "component base=<a> trace=<a,b,...>" lines
//
// Parse errors carry "<origin>:<line>:".  Mathematical validation failures
// carry the origin and, for diagrams, the line of the offending entry.

FiniteQuandle quandle_from_text(const std::string& text, const std::string& origin = "input");
std::string quandle_to_text(const FiniteQuandle& q);
FiniteQuandle read_quandle_file(const std::string& path);
void write_quandle_file(const std::string& path, const FiniteQuandle& q);

// The raw table without axiom checks, for tools that report every violation.
std::pair<std::string, Eigen::MatrixXi> quandle_table_from_text(const std::string& text,
                                                                const std::string& origin = "input");
std::pair<std::string, Eigen::MatrixXi> read_quandle_table_file(const std::string& path);

std::pair<std::string, Eigen::MatrixXi> group_table_from_text(const std::string& text,
                                                              const std::string& origin = "input");
std::pair<std::string, Eigen::MatrixXi> read_group_file(const std::string& path);

// The cochain is tied to a quandle by name and size.  check_name enforces
// the name binding (size is always enforced).
Cochain2 cochain_from_text(const std::string& text, const FiniteQuandle& base,
                           bool check_name = true, const std::string& origin = "input");
std::string cochain_to_text(const Cochain2& phi, const std::string& quandle_name);
Cochain2 read_cochain_file(const std::string& path, const FiniteQuandle& base,
                           bool check_name = true);
void write_cochain_file(const std::string& path, const Cochain2& phi,
                        const std::string& quandle_name);

LinkDiagram diagram_from_text(const std::string& text, const std::string& origin = "input");
std::string diagram_to_text(const LinkDiagram& d);
LinkDiagram read_diagram_file(const std::string& path);
void write_diagram_file(const std::string& path, const LinkDiagram& d);

// Directory with the bundled data files: $QUANDLEKIT_DATA when set, else the
// build-time default.
std::string data_dir();
std::string data_file(const std::string& name);

} // namespace quandlekit
