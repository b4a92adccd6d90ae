#include "tcnkit/newick.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <queue>

#include "tcnkit/errors.hpp"

namespace tcnkit {

namespace {

struct TempNode {
  std::vector<int> children;
  std::string label;
  int tag = -1;       // hybrid tag value, -1 for plain nodes
  bool is_def = false;  // this occurrence carries the child
  std::size_t offset = 0;
};

class Parser {
 public:
  Parser(std::string_view text, bool allow_tags) : text_(text), allow_tags_(allow_tags) {}

  int run() {
    int top = parse_expr(true);
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ';')
      throw ParseError("expected ';'", pos_);
    ++pos_;
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters after ';'", pos_);
    return top;
  }

  std::vector<TempNode> nodes;

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  int parse_tag(std::size_t off) {
    // at '#'
    ++pos_;
    if (peek() != 'H') throw ParseError("expected 'H' after '#'", pos_);
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected hybrid tag number", pos_);
    if (pos_ - start > 6) throw ParseError("hybrid tag number too large", start);
    if (!allow_tags_) throw ParseError("hybrid tags are not valid in plain Newick", off);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_expr(bool top) {
    skip_ws();
    std::size_t off = pos_;
    if (peek() == '(') {
      ++pos_;
      std::vector<int> children;
      children.push_back(parse_expr(false));
      while (true) {
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          children.push_back(parse_expr(false));
        } else {
          break;
        }
      }
      if (peek() != ')') throw ParseError("unbalanced parentheses: expected ')'", pos_);
      ++pos_;
      int id = static_cast<int>(nodes.size());
      nodes.push_back(TempNode{});
      nodes.back().children = std::move(children);
      nodes.back().offset = off;
      if (peek() == '#') {
        nodes.back().tag = parse_tag(pos_);
        nodes.back().is_def = true;
        if (nodes.back().children.size() != 1)
          throw ParseError("hybrid node must have exactly one child", off);
      } else {
        std::size_t arity = nodes.back().children.size();
        if (arity != 2 && !(top && arity == 1))
          throw ParseError("non-binary node with " + std::to_string(arity) + " children", off);
      }
      return id;
    }
    if (peek() == '#') {
      int tag = parse_tag(off);
      int id = static_cast<int>(nodes.size());
      nodes.push_back(TempNode{});
      nodes.back().tag = tag;
      nodes.back().offset = off;
      return id;
    }
    // leaf label
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
          c == ';' || c == ':' || c == '#')
        break;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("empty label", pos_);
    int id = static_cast<int>(nodes.size());
    nodes.push_back(TempNode{});
    nodes.back().label = std::string(text_.substr(start, pos_ - start));
    nodes.back().offset = off;
    auto it = label_offsets_.find(nodes.back().label);
    if (it != label_offsets_.end())
      throw ParseError("duplicate leaf label '" + nodes.back().label + "'", off);
    label_offsets_.emplace(nodes.back().label, off);
    return id;
  }

  std::string_view text_;
  bool allow_tags_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> label_offsets_;
};

}  // namespace

BinaryTree parse_newick(std::string_view text) {
  Parser parser(text, /*allow_tags=*/false);
  int top = parser.run();
  const auto& tn = parser.nodes;

  BinaryTree tree;
  std::vector<int> remap(tn.size(), -1);
  for (std::size_t i = 0; i < tn.size(); ++i)
    remap[i] = tree.add_node(tn[i].label);
  for (std::size_t i = 0; i < tn.size(); ++i)
    for (int c : tn[i].children) tree.add_edge(remap[i], remap[static_cast<std::size_t>(c)]);

  if (tn[static_cast<std::size_t>(top)].children.size() == 1) {
    tree.set_root(remap[static_cast<std::size_t>(top)]);
  } else {
    int root = tree.add_node();
    tree.add_edge(root, remap[static_cast<std::size_t>(top)]);
    tree.set_root(root);
  }
  tree.validate();
  return tree;
}

std::string write_newick(const BinaryTree& tree) { return canonical_form(tree); }

PhyloNetwork parse_extended_newick(std::string_view text) {
  Parser parser(text, /*allow_tags=*/true);
  int top = parser.run();
  auto& tn = parser.nodes;

  // Unify hybrid tags: one definition per tag, at least one reference.
  std::map<int, int> def_of_tag;
  std::map<int, int> occurrences;
  for (std::size_t i = 0; i < tn.size(); ++i) {
    if (tn[i].tag < 0) continue;
    ++occurrences[tn[i].tag];
    if (tn[i].is_def) {
      auto [it, fresh] = def_of_tag.emplace(tn[i].tag, static_cast<int>(i));
      if (!fresh)
        throw ParseError("hybrid tag #H" + std::to_string(tn[i].tag) +
                             " defined more than once with conflicting children",
                         tn[i].offset);
    }
  }
  for (auto [tag, count] : occurrences) {
    if (!def_of_tag.count(tag))
      throw ParseError("hybrid tag #H" + std::to_string(tag) + " has no definition", 0);
    if (count < 2)
      throw ParseError("hybrid tag #H" + std::to_string(tag) +
                           " appears once only; a reticulation needs indegree >= 2",
                       tn[static_cast<std::size_t>(def_of_tag[tag])].offset);
  }

  // Representative temp node per parsed node (references collapse to the def).
  auto repr = [&](int i) {
    return tn[static_cast<std::size_t>(i)].tag >= 0 && !tn[static_cast<std::size_t>(i)].is_def
               ? def_of_tag[tn[static_cast<std::size_t>(i)].tag]
               : i;
  };

  // Cycle check on the unified graph, with positions.
  {
    std::vector<int> state(tn.size(), 0);
    std::function<void(int)> dfs = [&](int i) {
      state[static_cast<std::size_t>(i)] = 1;
      for (int c : tn[static_cast<std::size_t>(i)].children) {
        int rc = repr(c);
        if (state[static_cast<std::size_t>(rc)] == 1)
          throw ParseError("cycle through hybrid tag", tn[static_cast<std::size_t>(rc)].offset);
        if (state[static_cast<std::size_t>(rc)] == 0) dfs(rc);
      }
      state[static_cast<std::size_t>(i)] = 2;
    };
    dfs(repr(top));
  }

  PhyloNetwork net;
  std::vector<int> remap(tn.size(), -1);
  for (std::size_t i = 0; i < tn.size(); ++i)
    if (static_cast<int>(i) == repr(static_cast<int>(i)))
      remap[i] = net.add_node(tn[i].label);
  for (std::size_t i = 0; i < tn.size(); ++i) {
    if (static_cast<int>(i) != repr(static_cast<int>(i))) continue;
    for (int c : tn[i].children)
      net.add_edge(remap[i], remap[static_cast<std::size_t>(repr(c))]);
  }
  int rtop = repr(top);
  const TempNode& topn = tn[static_cast<std::size_t>(rtop)];
  if (topn.children.size() == 1 && topn.tag < 0 && topn.label.empty()) {
    net.set_root(remap[static_cast<std::size_t>(rtop)]);
  } else {
    int root = net.add_node();
    net.add_edge(root, remap[static_cast<std::size_t>(rtop)]);
    net.set_root(root);
  }
  net.validate();
  return net;
}

std::string write_extended_newick(const PhyloNetwork& net) {
  net.validate();

  // Sorted descendant leaf names per node: a structural sort key, so output
  // does not depend on node ids and parse-then-write reproduces the text.
  std::vector<std::vector<std::string>> desc(static_cast<std::size_t>(net.node_count()));
  std::vector<char> done(static_cast<std::size_t>(net.node_count()), 0);
  std::function<const std::vector<std::string>&(int)> desc_of =
      [&](int id) -> const std::vector<std::string>& {
    auto& d = desc[static_cast<std::size_t>(id)];
    if (!done[static_cast<std::size_t>(id)]) {
      done[static_cast<std::size_t>(id)] = 1;
      if (net.is_leaf(id)) {
        d.push_back(net.node(id).label);
      } else {
        for (int c : net.node(id).children) {
          const auto& cd = desc_of(c);
          d.insert(d.end(), cd.begin(), cd.end());
        }
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
      }
    }
    return d;
  };
  auto key_less = [&](int a, int b) {
    const auto &da = desc_of(a), &db = desc_of(b);
    if (da != db) return da < db;
    return a < b;
  };

  // Hybrid tags in topological order of the reticulate nodes; ready nodes
  // are taken smallest structural key first so the order is canonical.
  std::map<int, int> tag_of;
  {
    std::vector<int> indeg(static_cast<std::size_t>(net.node_count()), 0);
    for (int i = 0; i < net.node_count(); ++i)
      indeg[static_cast<std::size_t>(i)] = static_cast<int>(net.node(i).parents.size());
    auto cmp = [&](int a, int b) { return key_less(b, a); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    ready.push(net.root());
    int next_tag = 1;
    while (!ready.empty()) {
      int u = ready.top();
      ready.pop();
      if (net.node(u).parents.size() >= 2) tag_of[u] = next_tag++;
      for (int c : net.node(u).children)
        if (--indeg[static_cast<std::size_t>(c)] == 0) ready.push(c);
    }
  }

  std::vector<char> emitted(static_cast<std::size_t>(net.node_count()), 0);
  std::function<std::string(int)> render = [&](int id) -> std::string {
    if (net.is_leaf(id)) return net.node(id).label;
    auto it = tag_of.find(id);
    if (it != tag_of.end()) {
      if (emitted[static_cast<std::size_t>(id)]) return "#H" + std::to_string(it->second);
      emitted[static_cast<std::size_t>(id)] = 1;
      return "(" + render(net.node(id).children.front()) + ")#H" + std::to_string(it->second);
    }
    std::vector<int> kids = net.node(id).children;
    std::sort(kids.begin(), kids.end(), key_less);
    std::string out = "(";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i > 0) out += ',';
      out += render(kids[i]);
    }
    out += ')';
    return out;
  };

  return "(" + render(net.node(net.root()).children.front()) + ");";
}

}  // namespace tcnkit
