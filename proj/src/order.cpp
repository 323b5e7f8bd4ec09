#include "dagbook/order.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dagbook {

LinearOrder LinearOrder::from_sequence(const std::vector<int>& seq) {
  LinearOrder result;
  result.position.assign(seq.size(), -1);
  for (size_t p = 0; p < seq.size(); p++) {
    int v = seq[p];
    if (v < 0 || v >= static_cast<int>(seq.size()) || result.position[v] != -1) {
      throw std::invalid_argument("sequence is not a permutation of 0..n-1");
    }
    result.position[v] = static_cast<int>(p);
  }
  return result;
}

std::vector<int> LinearOrder::sequence() const {
  std::vector<int> seq(position.size(), -1);
  for (int v = 0; v < size(); v++) seq[position[v]] = v;
  return seq;
}

LinearOrder LinearOrder::reversed() const {
  LinearOrder result;
  result.position.resize(position.size());
  const int n = size();
  for (int v = 0; v < n; v++) result.position[v] = n - 1 - position[v];
  return result;
}

bool LinearOrder::is_permutation() const {
  std::vector<bool> seen(position.size(), false);
  for (int p : position) {
    if (p < 0 || p >= size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

bool is_linear_extension(const Dag& g, const LinearOrder& sigma) {
  if (sigma.size() != g.n) {
    throw std::invalid_argument("order size does not match vertex count");
  }
  for (const Edge& e : g.edges) {
    if (sigma.pos(e.source) >= sigma.pos(e.target)) return false;
  }
  return true;
}

bool edges_cross(const LinearOrder& sigma, const Edge& e, const Edge& f) {
  if (e.source == f.source || e.source == f.target || e.target == f.source ||
      e.target == f.target) {
    return false;
  }
  const int a = sigma.pos(e.source), b = sigma.pos(e.target);
  const int c = sigma.pos(f.source), d = sigma.pos(f.target);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::string part_label_name(PartLabel label) {
  switch (label) {
    case PartLabel::H1: return "H1";
    case PartLabel::S: return "s";
    case PartLabel::H2: return "H2";
    case PartLabel::H3: return "H3";
    case PartLabel::T: return "t";
    case PartLabel::H4: return "H4";
    case PartLabel::M: return "m";
  }
  return "?";
}

int PartitionedOrder::part_of_position(int p) const {
  for (size_t i = 0; i < parts.size(); i++) {
    if (parts[i].begin <= p && p < parts[i].end) return static_cast<int>(i);
  }
  return -1;
}

PartLabel PartitionedOrder::label_of_vertex(int v) const {
  int idx = part_of_position(order.pos(v));
  if (idx < 0) throw std::logic_error("vertex position not covered by parts");
  return parts[idx].label;
}

std::string PartitionedOrder::check_structure() const {
  int expect = 0;
  for (const Part& part : parts) {
    if (part.begin != expect) {
      return "part " + part_label_name(part.label) + " does not start at position " +
             std::to_string(expect);
    }
    if (part.end < part.begin) return "negative-length part";
    bool singleton = part.label == PartLabel::S || part.label == PartLabel::T ||
                     part.label == PartLabel::M;
    if (singleton && part.length() != 1) {
      return "singleton part " + part_label_name(part.label) + " has length " +
             std::to_string(part.length());
    }
    expect = part.end;
  }
  if (expect != order.size()) return "parts do not cover all positions";
  if (!order.is_permutation()) return "order is not a permutation";
  return "";
}

}  // namespace dagbook
