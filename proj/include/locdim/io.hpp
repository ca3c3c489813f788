#pragma once

#include <iosfwd>
#include <string>

#include "locdim/cover.hpp"
#include "locdim/diffgraph.hpp"
#include "locdim/poset.hpp"
#include "locdim/realizer.hpp"

namespace locdim {

/* Plain-text readers and writers.
 *
 * All readers skip blank lines and lines whose first non-space character
 * is '#', and throw ParseError carrying the 1-based line number of the
 * offending line.  Writers emit a canonical form (fixed field order,
 * ascending where the format does not already dictate an order) so that
 * outputs are byte-stable and re-parse to an equal object.
 *
 * poset:    header `poset <n>`, then one `<i> < <j>` line per relation.
 *           Any generating set is accepted; the transitive closure is
 *           taken on load.  The writer emits covering pairs only.
 * realizer: one `ple: <i1> <i2> ... <ik>` line per ple, least to
 *           greatest in the ple's order.  Empty ples are rejected.
 * bigraph:  header `bigraph <a> <b>`, then one `<u> <w>` line per edge.
 * cover:    one member per line, either
 *               rect: u1,u2,... | w1,w2,...
 *           or  diff: u1,u2,... | w1,w2,... | f1,f2,...
 *           with rows in nesting order and f the row degree sequence. */

Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

LocalRealizer read_realizer(std::istream& in);
void write_realizer(std::ostream& out, const LocalRealizer& r);

BipartiteGraph read_bigraph(std::istream& in);
void write_bigraph(std::ostream& out, const BipartiteGraph& g);

CoverFamily read_cover(std::istream& in);
void write_cover(std::ostream& out, const CoverFamily& c);

// Path conveniences.  Reads throw ParseError("cannot open ...") when the
// file is missing; writes throw Error on failure.
Poset read_poset_file(const std::string& path);
LocalRealizer read_realizer_file(const std::string& path);
BipartiteGraph read_bigraph_file(const std::string& path);
CoverFamily read_cover_file(const std::string& path);
void write_poset_file(const std::string& path, const Poset& p);
void write_realizer_file(const std::string& path, const LocalRealizer& r);
void write_bigraph_file(const std::string& path, const BipartiteGraph& g);
void write_cover_file(const std::string& path, const CoverFamily& c);

} // namespace locdim
