#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "dagbook/recognition.hpp"

namespace dagbook {

bool is_planar(int n, const std::vector<Edge>& edges) {
  if (n <= 4) return true;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (const Edge& e : edges) boost::add_edge(e.source, e.target, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace dagbook
