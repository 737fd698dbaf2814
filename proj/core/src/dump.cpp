#include "bddil/dump.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "bddil/semantics.hpp"

namespace bddil {

void write_diagram(std::ostream& out, const DiagramStore& store, NodeRef root) {
  const std::vector<NodeRef> order = reachable_nodes(store, root);
  std::unordered_map<NodeRef, std::size_t> line_of;
  std::size_t line = 0;
  for (NodeRef ref : order) line_of.emplace(ref, ++line);
  for (NodeRef ref : order) {
    const Node& n = store.node(ref);
    switch (n.kind) {
      case NodeKind::False:
        out << "F";
        break;
      case NodeKind::True:
        out << "T";
        for (Literal l : store.literal_set(n.lits)) out << ' ' << l.to_dimacs();
        break;
      case NodeKind::Decision:
        out << "D " << n.var.index() << ' ' << line_of.at(n.lo) << ' ' << line_of.at(n.hi);
        for (Literal l : store.literal_set(n.lits)) out << ' ' << l.to_dimacs();
        break;
    }
    out << '\n';
  }
  out << "root " << line_of.at(root) << '\n';
}

NodeRef read_diagram(std::istream& in, DiagramStore& store) {
  std::vector<NodeRef> refs;
  std::string line;
  int line_no = 0;
  std::optional<NodeRef> root;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    auto read_lits = [&]() {
      std::vector<Literal> lits;
      int v = 0;
      while (ls >> v) {
        if (v == 0) throw ParseError(line_no, "literal 0 in a node line");
        lits.push_back(Literal::from_dimacs(v));
      }
      try {
        return LiteralSet::from(lits);
      } catch (const InconsistentSet& e) {
        throw ParseError(line_no, e.what());
      }
    };
    auto read_ref = [&]() {
      std::size_t r = 0;
      if (!(ls >> r) || r == 0 || r > refs.size()) {
        throw ParseError(line_no, "node ref must point to an earlier line");
      }
      return refs[r - 1];
    };
    if (tag == "F") {
      refs.push_back(store.false_ref());
    } else if (tag == "T") {
      refs.push_back(store.mk_true(read_lits()));
    } else if (tag == "D") {
      std::uint32_t var = 0;
      if (!(ls >> var) || var == 0) throw ParseError(line_no, "bad decision variable");
      NodeRef lo = read_ref();
      NodeRef hi = read_ref();
      try {
        refs.push_back(store.mk_decision(Variable(var), lo, hi,
                                         store.intern_literal_set(read_lits())));
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (tag == "root") {
      root = read_ref();
    } else {
      throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!root.has_value()) throw ParseError(line_no, "missing root line");
  return *root;
}

void write_dot(std::ostream& out, const DiagramStore& store, NodeRef root) {
  out << "digraph bdd {\n";
  for (NodeRef ref : reachable_nodes(store, root)) {
    const Node& n = store.node(ref);
    out << "  n" << ref.id();
    switch (n.kind) {
      case NodeKind::False:
        out << " [shape=box,label=\"F\"];\n";
        break;
      case NodeKind::True: {
        out << " [shape=box,label=\"T";
        for (Literal l : store.literal_set(n.lits)) out << ' ' << l.to_dimacs();
        out << "\"];\n";
        break;
      }
      case NodeKind::Decision: {
        out << " [shape=circle,label=\"x" << n.var.index();
        const LiteralSet& lits = store.literal_set(n.lits);
        if (!lits.empty()) {
          out << "\\n{";
          bool first = true;
          for (Literal l : lits) {
            if (!first) out << ' ';
            out << l.to_dimacs();
            first = false;
          }
          out << "}";
        }
        out << "\"];\n";
        out << "  n" << ref.id() << " -> n" << n.lo.id() << " [style=dashed];\n";
        out << "  n" << ref.id() << " -> n" << n.hi.id() << ";\n";
        break;
      }
    }
  }
  out << "}\n";
}

}  // namespace bddil
