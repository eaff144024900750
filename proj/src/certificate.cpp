#include "rayleigh/certificate.hpp"

#include <sstream>

namespace rayleigh {

const std::string* CertificateNode::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return &v;
  return nullptr;
}

namespace {

void render(const CertificateNode& node, int depth, std::ostringstream& os) {
  std::string pad(2 * depth, ' ');
  os << pad << "node " << node.rule << " graph=[" << node.graph_key << "]\n";
  for (const auto& [k, v] : node.params) os << pad << "  param " << k << "=" << v << "\n";
  for (const auto& eq : node.equalities)
    os << pad << "  eq " << eq.name << ": " << eq.lhs << " = " << eq.rhs << "\n";
  for (const auto& child : node.children) render(child, depth + 1, os);
}

int count_nodes(const CertificateNode& node) {
  int total = 1;
  for (const auto& c : node.children) total += count_nodes(c);
  return total;
}

}  // namespace

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "certificate\n";
  os << "e: " << e.id << " " << e.tail << "->" << e.head << "\n";
  os << "f: " << f.id << " " << f.tail << "->" << f.head << "\n";
  render(root, 0, os);
  return os.str();
}

int Certificate::node_count() const { return count_nodes(root); }

bool Certificate::operator==(const Certificate& o) const {
  return e.id == o.e.id && e.tail == o.e.tail && e.head == o.e.head && f.id == o.f.id &&
         f.tail == o.f.tail && f.head == o.f.head && root == o.root;
}

}  // namespace rayleigh
