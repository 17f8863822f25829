#include "lambdalat/dot.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "lambdalat/instance_io.hpp"

namespace lambdalat {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Longest chain from a minimal element; equals height when there is a bottom.
std::vector<int> levels(const Poset& p) {
  std::vector<int> level(p.size(), -1);
  std::function<int(Element)> visit = [&](Element x) -> int {
    if (level[x] >= 0) return level[x];
    int best = 0;
    for (Element c : p.lower_covers(x)) best = std::max(best, visit(c) + 1);
    return level[x] = best;
  };
  for (Element x = 0; x < p.size(); ++x) visit(x);
  return level;
}

void write_graph(std::ostringstream& out, const Poset& p, std::string_view name) {
  out << "digraph " << quoted(name.empty() ? "poset" : name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (Element x = 0; x < p.size(); ++x) out << "  n" << x << " [label=" << quoted(p.label(x)) << "];\n";

  std::map<int, std::vector<Element>> ranks;
  const std::vector<int> level = levels(p);
  for (Element x = 0; x < p.size(); ++x) ranks[level[x]].push_back(x);
  for (const auto& [rank, members] : ranks) {
    out << "  { rank=same;";
    for (Element x : members) out << " n" << x << ";";
    out << " }\n";
  }
  for (auto [x, y] : p.cover_pairs()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
}

}  // namespace

std::string export_dot(const Poset& p, std::string_view name) {
  std::ostringstream out;
  write_graph(out, p, name);
  return out.str();
}

std::string export_dot(const LambdaLattice& ll, std::string_view name) {
  std::ostringstream out;
  const Poset& p = ll.poset();
  const auto choices = explicit_choices(ll);
  if (!choices.empty()) {
    out << "// explicit choices\n";
    for (const ExplicitChoice& c : choices) {
      out << "// " << (c.is_join ? "join " : "meet ") << p.label(c.x) << ' ' << p.label(c.y) << " = "
          << p.label(c.value) << "\n";
    }
  }
  write_graph(out, p, name);
  return out.str();
}

}  // namespace lambdalat
