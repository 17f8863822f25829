#include "lambdalat/instance_io.hpp"

#include <map>
#include <sstream>

#include "lambdalat/errors.hpp"

namespace lambdalat {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Assignment {
  Token x;
  Token y;
  Token value;
};

std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
  }
  return out;
}

class InstanceReader {
 public:
  explicit InstanceReader(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++line_no;
      read_line(tokenize_line(text.substr(pos, end - pos), line_no));
      pos = end + 1;
    }
    if (!elements_) throw ParseError(1, 1, "missing `elements:` line");
  }

  ParsedInstance build() const {
    const std::vector<std::string>& names = *elements_;
    std::vector<std::pair<Element, Element>> cover_list;
    for (const auto& [lo, hi] : covers_) cover_list.emplace_back(resolve(lo), resolve(hi));
    Poset p = poset_from_covers(names.size(), cover_list, names);

    ChoiceSpec choice;
    std::map<ElementPair, Token> seen_join;
    std::map<ElementPair, Token> seen_meet;
    auto apply = [&](const std::vector<Assignment>& list, bool is_join) {
      auto& seen = is_join ? seen_join : seen_meet;
      for (const Assignment& a : list) {
        const Element x = resolve(a.x);
        const Element y = resolve(a.y);
        const Element v = resolve(a.value);
        const ElementPair key = ChoiceSpec::key(x, y);
        if (!seen.emplace(key, a.x).second) {
          throw ParseError(a.x.line, a.x.column,
                           std::string("duplicate ") + (is_join ? "join" : "meet") + " for " + a.x.text + " " + a.y.text);
        }
        if (x == y || !p.incomparable(x, y)) {
          throw BadChoiceError(std::string(is_join ? "join" : "meet") + " given for comparable pair (" + a.x.text +
                               ", " + a.y.text + ")");
        }
        if (is_join) {
          choice.set_join(x, y, v);
        } else {
          choice.set_meet(x, y, v);
        }
      }
    };
    apply(joins_, true);
    apply(meets_, false);

    const bool operations_given = acute_ || !joins_.empty() || !meets_.empty();
    if (acute_) {
      auto b = bounds(p);
      if (!b) throw UnboundedError("`acute` needs a bounded poset");
      for (Element x = 0; x < p.size(); ++x) {
        for (Element y = x + 1; y < p.size(); ++y) {
          if (!p.incomparable(x, y)) continue;
          if (!choice.join(x, y)) choice.set_join(x, y, b->top);
          if (!choice.meet(x, y)) choice.set_meet(x, y, b->bottom);
        }
      }
    }

    if (operations_given) return {p, from_choice(p, choice)};
    if (!is_directed(p)) return {p, std::nullopt};
    try {
      return {p, from_choice(p, choice)};
    } catch (const IncompleteChoiceError&) {
      return {p, std::nullopt};
    }
  }

 private:
  void read_line(const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    const Token& head = tokens.front();
    const std::size_t args = tokens.size() - 1;
    if (head.text == "elements:") {
      if (elements_) throw ParseError(head.line, head.column, "duplicate `elements:` line");
      if (args == 0) throw ParseError(head.line, head.column, "`elements:` needs at least one name");
      std::vector<std::string> names;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.text == "<" || t.text == "=") throw ParseError(t.line, t.column, "`" + t.text + "` is not a valid name");
        if (index_.count(t.text)) throw ParseError(t.line, t.column, "duplicate element `" + t.text + "`");
        index_.emplace(t.text, names.size());
        names.push_back(t.text);
      }
      if (names.size() > kMaxElements) {
        throw ParseError(head.line, head.column, "at most " + std::to_string(kMaxElements) + " elements are supported");
      }
      elements_ = std::move(names);
    } else if (head.text == "covers:") {
      if (args % 3 != 0) throw ParseError(head.line, head.column, "`covers:` expects groups of `a < b`");
      for (std::size_t i = 1; i < tokens.size(); i += 3) {
        if (tokens[i + 1].text != "<") {
          throw ParseError(tokens[i + 1].line, tokens[i + 1].column, "expected `<`");
        }
        covers_.emplace_back(tokens[i], tokens[i + 2]);
      }
    } else if (head.text == "join:" || head.text == "meet:") {
      if (args != 4 || tokens[3].text != "=") {
        throw ParseError(head.line, head.column, "expected `" + head.text + " <a> <b> = <c>`");
      }
      Assignment a{tokens[1], tokens[2], tokens[4]};
      (head.text == "join:" ? joins_ : meets_).push_back(std::move(a));
    } else if (head.text == "acute") {
      if (args != 0) throw ParseError(tokens[1].line, tokens[1].column, "`acute` takes no arguments");
      if (acute_) throw ParseError(head.line, head.column, "duplicate `acute` directive");
      acute_ = true;
    } else {
      throw ParseError(head.line, head.column, "unknown directive `" + head.text + "`");
    }
  }

  Element resolve(const Token& t) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) throw ParseError(t.line, t.column, "unknown element `" + t.text + "`");
    return it->second;
  }

  std::optional<std::vector<std::string>> elements_;
  std::map<std::string, Element> index_;
  std::vector<std::pair<Token, Token>> covers_;
  std::vector<Assignment> joins_;
  std::vector<Assignment> meets_;
  bool acute_ = false;
};

void render_header(std::ostringstream& out, const Poset& p, std::string_view name) {
  if (!name.empty()) out << "# " << name << "\n";
  out << "elements:";
  for (const auto& label : p.labels()) out << ' ' << label;
  out << "\n";
  const auto covers = p.cover_pairs();
  if (!covers.empty()) {
    out << "covers:";
    for (auto [x, y] : covers) out << ' ' << p.label(x) << " < " << p.label(y);
    out << "\n";
  }
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) { return InstanceReader(text).build(); }

LambdaLattice parse_lattice(std::string_view text) {
  ParsedInstance parsed = parse_instance(text);
  if (!parsed.lattice) {
    if (!is_directed(parsed.poset)) throw NotDirectedError("poset is not directed");
    // Re-run the construction so the error names the first undetermined pair.
    from_choice(parsed.poset, ChoiceSpec{});
    throw IncompleteChoiceError("instance does not determine every join and meet");
  }
  return std::move(*parsed.lattice);
}

std::vector<ExplicitChoice> explicit_choices(const LambdaLattice& ll) {
  const Poset& p = ll.poset();
  std::vector<ExplicitChoice> joins;
  std::vector<ExplicitChoice> meets;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      if (forced_join(p, x, y) != ll.join(x, y)) joins.push_back({true, x, y, ll.join(x, y)});
      if (forced_meet(p, x, y) != ll.meet(x, y)) meets.push_back({false, x, y, ll.meet(x, y)});
    }
  }
  joins.insert(joins.end(), meets.begin(), meets.end());
  return joins;
}

std::string render_instance(const LambdaLattice& ll, std::string_view name) {
  std::ostringstream out;
  const Poset& p = ll.poset();
  render_header(out, p, name);
  for (const ExplicitChoice& c : explicit_choices(ll)) {
    out << (c.is_join ? "join: " : "meet: ") << p.label(c.x) << ' ' << p.label(c.y) << " = " << p.label(c.value)
        << "\n";
  }
  return out.str();
}

std::string render_poset(const Poset& p, std::string_view name) {
  std::ostringstream out;
  render_header(out, p, name);
  return out.str();
}

}  // namespace lambdalat
