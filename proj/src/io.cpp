#include "dagbook/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dagbook {

namespace {

// Next non-empty line with comments stripped, or false at end of input.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) return true;
  }
  return false;
}

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::runtime_error("parse error: " + what);
}

}  // namespace

Dag read_dag(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) parse_fail("missing header line");
  std::istringstream header(line);
  std::string tag;
  int n = 0, m = 0;
  if (!(header >> tag >> n >> m) || tag != "dag") {
    parse_fail("header must be 'dag <n> <m>'");
  }
  if (n < 0 || m < 0) parse_fail("negative counts in header");
  Dag g;
  g.n = n;
  g.edges.reserve(m);
  for (int i = 0; i < m; i++) {
    if (!next_content_line(in, line)) parse_fail("expected " + std::to_string(m) + " edges");
    std::istringstream edge_line(line);
    int u = 0, v = 0;
    if (!(edge_line >> u >> v)) parse_fail("bad edge line: " + line);
    if (u < 0 || u >= n || v < 0 || v >= n) parse_fail("edge endpoint out of range: " + line);
    g.edges.push_back({u, v});
  }
  return g;
}

Dag read_dag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dag(in);
}

void write_dag(std::ostream& out, const Dag& g) {
  out << "dag " << g.n << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges) out << e.source << " " << e.target << "\n";
}

void write_dag_file(const std::string& path, const Dag& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_dag(out, g);
}

LinearOrder read_order(std::istream& in, int n) {
  std::string line;
  if (!next_content_line(in, line)) parse_fail("missing order line");
  std::istringstream order_line(line);
  std::string tag;
  if (!(order_line >> tag) || tag != "order:") parse_fail("expected 'order: v0 v1 ...'");
  std::vector<int> seq;
  int v;
  while (order_line >> v) seq.push_back(v);
  if (static_cast<int>(seq.size()) != n) {
    parse_fail("order lists " + std::to_string(seq.size()) + " vertices, expected " +
               std::to_string(n));
  }
  return LinearOrder::from_sequence(seq);
}

StackLayout read_layout(std::istream& in, const Dag& g) {
  StackLayout layout;
  layout.order = read_order(in, g.n);
  layout.page_of.assign(g.edge_count(), -1);

  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < g.edge_count(); i++) {
    index[directed_edge_key(g.edges[i].source, g.edges[i].target)] = i;
  }
  std::string line;
  int max_page = -1;
  for (int i = 0; i < g.edge_count(); i++) {
    if (!next_content_line(in, line)) parse_fail("expected a page line per edge");
    std::istringstream page_line(line);
    int u = 0, v = 0, page = 0;
    if (!(page_line >> u >> v >> page)) parse_fail("bad layout line: " + line);
    auto it = index.find(directed_edge_key(u, v));
    if (it == index.end()) parse_fail("layout edge not in graph: " + line);
    if (layout.page_of[it->second] != -1) parse_fail("duplicate layout edge: " + line);
    if (page < 0) parse_fail("negative page: " + line);
    layout.page_of[it->second] = page;
    max_page = std::max(max_page, page);
  }
  layout.pages = max_page + 1;
  return layout;
}

StackLayout read_layout_file(const std::string& path, const Dag& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_layout(in, g);
}

void write_layout(std::ostream& out, const Dag& g, const StackLayout& layout) {
  out << "order:";
  for (int v : layout.order.sequence()) out << " " << v;
  out << "\n";
  for (int i = 0; i < g.edge_count(); i++) {
    out << g.edges[i].source << " " << g.edges[i].target << " " << layout.page_of[i]
        << "\n";
  }
}

std::string format_parts(const PartitionedOrder& po) {
  std::ostringstream out;
  out << "parts:";
  for (const Part& part : po.parts) {
    out << " " << part_label_name(part.label) << "=";
    bool singleton = part.label == PartLabel::S || part.label == PartLabel::T ||
                     part.label == PartLabel::M;
    if (singleton) {
      out << part.begin;
    } else {
      out << part.begin << ".." << part.end;
    }
  }
  return out.str();
}

}  // namespace dagbook
