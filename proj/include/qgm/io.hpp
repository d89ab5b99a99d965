#ifndef QGM_IO_HPP
#define QGM_IO_HPP

#include <iosfwd>
#include <string>

#include "qgm/biased.hpp"
#include "qgm/gfmatrix.hpp"
#include "qgm/graph.hpp"
#include "qgm/matroid.hpp"

namespace qgm {

// Text formats (one declaration per line; blank lines and '#' comments are
// skipped):
//
//   graph:    v <label>
//             e <label> <u> <w>        (u = w encodes a loop-edge)
//
//   matroid:  explicit <n>             then optional 'ground <labels...>'
//                                      and 'basis <labels...>' lines
//             graphic                  then a graph block
//             linear p=<p> rows=<r>    then 'col <label> <r values>' lines
//             uniform <r> <n>          (elements e1..en)
//
//   biased:   a graph block, then 'balanced <edge labels...>' per cycle.
//
// Printing is canonical, so parse(print(x)) == x and print is bit-exact
// stable on canonicalized input.

MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph_file(const std::string& path);
std::string print_graph(const MultiGraph& g);

MatroidPtr parse_matroid(std::istream& in);
MatroidPtr parse_matroid_file(const std::string& path);
std::string print_matroid_explicit(const Matroid& m);

PrimeFieldMatrix parse_matrix(std::istream& in);
PrimeFieldMatrix parse_matrix_file(const std::string& path);
std::string print_matrix(const PrimeFieldMatrix& a);

BiasedGraph parse_biased(std::istream& in);
BiasedGraph parse_biased_file(const std::string& path);
std::string print_biased(const BiasedGraph& bg);

}  // namespace qgm

#endif  // QGM_IO_HPP
