#include "cfgflow/dot.hpp"

#include "cfgflow/error.hpp"

#include <sstream>

namespace cfgflow {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Dag& d, const std::vector<std::string>& labels, const std::optional<RationalVector>& flow,
                       const std::string& name) {
  if (labels.size() != d.vertex_count()) throw Error(ErrorKind::DomainMismatch, "one label per vertex is required");
  if (flow && static_cast<std::size_t>(flow->size()) != d.edge_count())
    throw Error(ErrorKind::DomainMismatch, "flow does not match the digraph");
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v) out << "  v" << v << " [label=" << quoted(labels[v]) << "];\n";
  for (std::size_t id = 0; id < d.edge_count(); ++id) {
    const Edge& e = d.edge(id);
    out << "  v" << e.tail << " -> v" << e.head;
    if (flow) out << " [label=" << quoted(to_string((*flow)[static_cast<Eigen::Index>(id)])) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cfgflow
