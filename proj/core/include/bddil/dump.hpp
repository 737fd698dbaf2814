#pragma once

#include <iosfwd>

#include "bddil/store.hpp"

namespace bddil {

/// Textual diagram dump. One node per line, referenced by line number
/// (1-based, counting node lines only):
///   F
///   T <lit>*
///   D <var> <loRef> <hiRef> <lit>*
/// and a final `root <ref>` line. Literals are signed integers. Nodes are
/// written children before parents, so every ref points upward in the file.
void write_diagram(std::ostream& out, const DiagramStore& store, NodeRef root);

/// Reads a dump back, re-consing every node into `store`.
/// Throws ParseError on malformed input.
NodeRef read_diagram(std::istream& in, DiagramStore& store);

/// Graphviz rendering; low edges dashed, high edges solid.
void write_dot(std::ostream& out, const DiagramStore& store, NodeRef root);

}  // namespace bddil
