#include "lambdalat/fixtures.hpp"

#include <stdexcept>

namespace lambdalat {

namespace {

constexpr std::string_view kFig2Poset =
    "elements: 0 a b c d e 1\n"
    "covers: 0 < a 0 < b 0 < c a < d a < e b < d b < e c < e d < 1 e < 1\n";

constexpr std::string_view kFig3Poset =
    "elements: 0 a b c d 1\n"
    "covers: 0 < a 0 < b a < c a < d b < c b < d c < 1 d < 1\n";

Fixture make(std::string name, std::string source, ClassTriple expected, std::optional<ExplicitChoice> family = {}) {
  LambdaLattice ll = parse_lattice(source);
  return Fixture{std::move(name), std::move(source), expected, family, std::move(ll)};
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> out;
  out.push_back(make("FIG2",
                     std::string(kFig2Poset) +
                         "join: a b = d\n"
                         "join: a c = e\n"
                         "join: b c = e\n"
                         "meet: d e = b\n",
                     {false, true, true}));
  out.push_back(make("FIG2-VARIANT",
                     std::string(kFig2Poset) +
                         "join: a b = 1\n"
                         "join: a c = e\n"
                         "join: b c = e\n"
                         "meet: d e = b\n",
                     {false, true, false}));
  out.push_back(make("FIG3",
                     std::string(kFig3Poset) +
                         "join: a b = c\n"
                         "meet: c d = a\n",
                     {true, true, true}));
  // Pairs not listed take their sup/inf.
  out.push_back(make("FIG4",
                     "elements: 0 a b c d e f g h 1\n"
                     "covers: 0 < a 0 < b a < c a < d b < d b < e c < f c < g d < f d < g d < h\n"
                     "covers: e < g e < h f < 1 g < 1 h < 1\n"
                     "join: a e = h\n"
                     "join: b c = f\n"
                     "join: c d = f\n"
                     "join: d e = h\n"
                     "meet: f g = c\n"
                     "meet: g h = e\n",
                     {true, true, true}));
  // c∧d = 0 although a is the greatest common lower bound.
  out.push_back(make("FIG5",
                     "elements: 0 a b c d 1\n"
                     "covers: 0 < a a < b a < c b < d c < 1 d < 1\n"
                     "meet: b c = a\n"
                     "meet: c d = 0\n",
                     {true, false, false}));
  // Only a∨c = d is prescribed; b∨c and d∧e take their least legal values.
  out.push_back(make("FIG6",
                     "elements: 0 a b c d e 1\n"
                     "covers: 0 < a a < b 0 < c b < d b < e c < d c < e d < 1 e < 1\n"
                     "join: a c = d\n"
                     "join: b c = d\n"
                     "meet: d e = 0\n",
                     {false, false, false}, ExplicitChoice{true, 1, 3, 4}));
  out.push_back(make("ACUTE-FIG3", std::string(kFig3Poset) + "acute\n", {true, true, false}));
  return out;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : fixture_catalog()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture `" + std::string(name) + "`");
}

std::string describe_family(const Fixture& f) {
  if (!f.family) return {};
  const auto& c = *f.family;
  const auto& p = f.lattice.poset();
  return std::string(c.is_join ? "join(" : "meet(") + p.label(c.x) + "," + p.label(c.y) + ")=" + p.label(c.value);
}

}  // namespace lambdalat
