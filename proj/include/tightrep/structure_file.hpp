#pragma once

// Line-oriented structure files:
//
//   # comment
//   @semilattice E
//   elements: 0 a b 1
//   zero: 0
//   meet:
//   0 0 0 0
//   ...
//
// @algebra adds a `join:` table, @inverse_semigroup uses `mul:`, and
// @representation / @homomorphism give `domain:`, `codomain:` and a `map:`
// followed by `x -> y` lines. Blocks refer only to earlier blocks.

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "tightrep/error.hpp"
#include "tightrep/inverse_semigroup.hpp"
#include "tightrep/lattice.hpp"
#include "tightrep/representation.hpp"

namespace tightrep {

struct RepresentationBlock {
  std::string domain;
  std::string codomain;
  Representation value;
};

struct HomomorphismBlock {
  std::string domain;
  std::string codomain;
  ISHomomorphism value;
};

struct Block {
  using Content =
      std::variant<FiniteMeetSemilattice, FiniteGenBoolAlg, RepresentationBlock, FiniteInverseSemigroup, HomomorphismBlock>;

  std::string name;
  std::size_t line = 0;
  Content content;
};

inline char const* block_keyword(Block::Content const& c) {
  static constexpr char const* keywords[] = {"semilattice", "algebra", "representation", "inverse_semigroup",
                                             "homomorphism"};
  return keywords[c.index()];
}

class StructureFile {
 public:
  std::vector<Block> const& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }

  Block const* find(std::string_view name) const {
    for (auto const& b : blocks_) {
      if (b.name == name) return &b;
    }
    return nullptr;
  }

  template <typename T>
  T const* get(std::string_view name) const {
    auto const* b = find(name);
    return b ? std::get_if<T>(&b->content) : nullptr;
  }

  /// Appends a block; the name must be new and references must resolve.
  void add(Block block) {
    if (find(block.name)) throw validation_error("duplicate structure name '" + block.name + "'");
    blocks_.push_back(std::move(block));
  }

 private:
  std::vector<Block> blocks_;
};

namespace detail {

struct RawLine {
  std::size_t number;
  std::vector<std::string> tokens;
  std::string text;
};

struct RawBlock {
  std::size_t line;
  std::string kind;
  std::string name;
  std::vector<RawLine> body;
};

inline std::vector<std::string> split_ws(std::string const& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::string trim(std::string s) {
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<RawBlock> split_blocks(std::string const& text) {
  std::vector<RawBlock> blocks;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto tokens = split_ws(line);
    if (line.front() == '@') {
      if (tokens.size() != 2) throw parse_error(number, "expected '@kind NAME'");
      blocks.push_back(RawBlock{number, tokens[0].substr(1), tokens[1], {}});
      continue;
    }
    if (blocks.empty()) throw parse_error(number, "content before the first '@' block");
    blocks.back().body.push_back(RawLine{number, std::move(tokens), line});
  }
  return blocks;
}

/// Key/value view over a block body with table and map sections.
class BlockReader {
 public:
  explicit BlockReader(RawBlock const& block) : block_(block) {
    auto const& body = block.body;
    for (std::size_t i = 0; i < body.size();) {
      auto const& l = body[i];
      auto colon = l.text.find(':');
      if (colon == std::string::npos) throw parse_error(l.number, "expected 'key: value'");
      std::string key = trim(l.text.substr(0, colon));
      std::string value = trim(l.text.substr(colon + 1));
      if (entries_.count(key)) throw parse_error(l.number, "duplicate key '" + key + "'");
      Entry entry{l.number, value, {}};
      ++i;
      if (value.empty()) {
        // a section: following lines without ':' belong to it
        while (i < body.size() && body[i].text.find(':') == std::string::npos) entry.rows.push_back(body[i++]);
      }
      entries_.emplace(key, std::move(entry));
    }
  }

  std::size_t line() const { return block_.line; }

  void allow(std::initializer_list<char const*> keys) const {
    for (auto const& [key, entry] : entries_) {
      bool known = false;
      for (auto k : keys) known = known || key == k;
      if (!known) throw parse_error(entry.line, "unknown key '" + key + "'");
    }
  }

  std::string const& value(std::string const& key) const {
    auto const& e = require(key);
    if (e.value.empty()) throw parse_error(e.line, "'" + key + "' needs a value");
    return e.value;
  }

  std::size_t line_of(std::string const& key) const { return require(key).line; }

  std::vector<std::string> list(std::string const& key) const { return split_ws(value(key)); }

  std::vector<std::vector<std::string>> table(std::string const& key, std::size_t n) const {
    auto const& e = require(key);
    if (!e.value.empty()) throw parse_error(e.line, "'" + key + ":' must be followed by table rows");
    if (e.rows.size() != n) {
      throw parse_error(e.line, "expected " + std::to_string(n) + " rows in '" + key + "', got " +
                                    std::to_string(e.rows.size()));
    }
    std::vector<std::vector<std::string>> rows;
    for (auto const& r : e.rows) {
      if (r.tokens.size() != n) throw parse_error(r.number, "expected " + std::to_string(n) + " entries");
      rows.push_back(r.tokens);
    }
    return rows;
  }

  std::vector<std::pair<std::string, std::string>> arrows(std::string const& key) const {
    auto const& e = require(key);
    if (!e.value.empty()) throw parse_error(e.line, "'" + key + ":' must be followed by 'x -> y' lines");
    std::vector<std::pair<std::string, std::string>> out;
    for (auto const& r : e.rows) {
      if (r.tokens.size() != 3 || r.tokens[1] != "->") throw parse_error(r.number, "expected 'x -> y'");
      out.emplace_back(r.tokens[0], r.tokens[2]);
    }
    return out;
  }

 private:
  struct Entry {
    std::size_t line;
    std::string value;
    std::vector<RawLine> rows;
  };

  Entry const& require(std::string const& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw parse_error(block_.line, "@" + block_.kind + " " + block_.name + ": missing '" + key + "'");
    return it->second;
  }

  RawBlock const& block_;
  std::map<std::string, Entry> entries_;
};

template <typename T>
T const& resolve(StructureFile const& file, BlockReader const& r, std::string const& key, char const* what) {
  auto const& name = r.value(key);
  auto const* block = file.find(name);
  if (!block) throw parse_error(r.line_of(key), "unknown structure '" + name + "'");
  auto const* value = std::get_if<T>(&block->content);
  if (!value) throw parse_error(r.line_of(key), "'" + name + "' is not " + what);
  return *value;
}

inline TableInput read_table_input(BlockReader const& r, std::initializer_list<char const*> tables) {
  TableInput input;
  input.elements = r.list("elements");
  auto zero = r.list("zero");
  if (zero.size() != 1) throw parse_error(r.line_of("zero"), "expected a single zero element");
  input.zero = zero.front();
  for (auto t : tables) {
    auto rows = r.table(t, input.elements.size());
    if (std::string(t) == "join") {
      input.join = std::move(rows);
    } else {
      input.meet = std::move(rows);
    }
  }
  return input;
}

inline Block::Content read_block(StructureFile const& file, RawBlock const& raw) {
  BlockReader r(raw);
  if (raw.kind == "semilattice") {
    r.allow({"elements", "zero", "meet"});
    return validate_semilattice(read_table_input(r, {"meet"}));
  }
  if (raw.kind == "algebra") {
    r.allow({"elements", "zero", "meet", "join"});
    return validate_algebra(read_table_input(r, {"meet", "join"}));
  }
  if (raw.kind == "inverse_semigroup") {
    r.allow({"elements", "zero", "mul"});
    auto t = read_table_input(r, {"mul"});
    return validate_inverse_semigroup(SemigroupInput{t.elements, t.zero, t.meet});
  }
  if (raw.kind == "representation") {
    r.allow({"domain", "codomain", "map"});
    auto const& domain = resolve<FiniteMeetSemilattice>(file, r, "domain", "a semilattice");
    auto const& codomain = resolve<FiniteGenBoolAlg>(file, r, "codomain", "an algebra");
    auto rep = validate_representation(domain, IdealView::full(codomain), r.arrows("map"));
    return RepresentationBlock{r.value("domain"), r.value("codomain"), std::move(rep)};
  }
  if (raw.kind == "homomorphism") {
    r.allow({"domain", "codomain", "map"});
    auto const& domain = resolve<FiniteInverseSemigroup>(file, r, "domain", "an inverse semigroup");
    auto const& codomain = resolve<FiniteInverseSemigroup>(file, r, "codomain", "an inverse semigroup");
    auto hom = validate_homomorphism(domain, codomain, r.arrows("map"));
    return HomomorphismBlock{r.value("domain"), r.value("codomain"), std::move(hom)};
  }
  throw parse_error(raw.line, "unknown block kind '@" + raw.kind + "'");
}

}  // namespace detail

/// Parses and validates every block. The first problem is reported as a
/// parse_error carrying its line; validation failures point at the block.
inline StructureFile parse_structure_file(std::string const& text) {
  StructureFile file;
  for (auto const& raw : detail::split_blocks(text)) {
    if (file.find(raw.name)) throw parse_error(raw.line, "duplicate structure name '" + raw.name + "'");
    try {
      file.add(Block{raw.name, raw.line, detail::read_block(file, raw)});
    } catch (parse_error const&) {
      throw;
    } catch (error const& err) {
      throw parse_error(raw.line, "@" + raw.kind + " " + raw.name + ": " + err.what());
    }
  }
  return file;
}

inline StructureFile read_structure_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_structure_file(text.str());
}

namespace detail {

inline void render_table(std::ostream& out, char const* key, Carrier const& c, OperationTable const& t) {
  out << key << ":\n";
  for (element i = 0; i < c.size(); ++i) {
    for (element j = 0; j < c.size(); ++j) out << (j ? " " : "") << c.name(t(i, j));
    out << '\n';
  }
}

inline void render_header(std::ostream& out, char const* kind, std::string const& name, Carrier const& c,
                          element zero) {
  out << '@' << kind << ' ' << name << '\n' << "elements:";
  for (auto const& n : c.names()) out << ' ' << n;
  out << "\nzero: " << c.name(zero) << '\n';
}

}  // namespace detail

inline void render_semilattice(std::ostream& out, std::string const& name, FiniteMeetSemilattice const& e) {
  detail::render_header(out, "semilattice", name, e.carrier(), e.zero());
  detail::render_table(out, "meet", e.carrier(), e.meet_table());
}

inline void render_algebra(std::ostream& out, std::string const& name, FiniteGenBoolAlg const& b) {
  detail::render_header(out, "algebra", name, b.carrier(), b.zero());
  detail::render_table(out, "meet", b.carrier(), b.meet_table());
  detail::render_table(out, "join", b.carrier(), b.join_table());
}

inline void render_semigroup(std::ostream& out, std::string const& name, FiniteInverseSemigroup const& s) {
  detail::render_header(out, "inverse_semigroup", name, s.carrier(), s.zero());
  detail::render_table(out, "mul", s.carrier(), s.mul_table());
}

inline void render_representation(std::ostream& out, std::string const& name, std::string const& domain,
                                  std::string const& codomain, Representation const& rep) {
  out << "@representation " << name << "\ndomain: " << domain << "\ncodomain: " << codomain << "\nmap:\n";
  for (element x = 0; x < rep.domain().size(); ++x) {
    out << rep.domain().name(x) << " -> " << rep.algebra().name(rep(x)) << '\n';
  }
}

inline void render_homomorphism(std::ostream& out, std::string const& name, std::string const& domain,
                                std::string const& codomain, ISHomomorphism const& hom) {
  out << "@homomorphism " << name << "\ndomain: " << domain << "\ncodomain: " << codomain << "\nmap:\n";
  for (element s = 0; s < hom.domain().size(); ++s) {
    out << hom.domain().name(s) << " -> " << hom.codomain().name(hom(s)) << '\n';
  }
}

/// Canonical text of a file: blocks in order, separated by blank lines.
inline std::string render(StructureFile const& file) {
  std::ostringstream out;
  bool first = true;
  for (auto const& block : file.blocks()) {
    if (!first) out << '\n';
    first = false;
    std::visit(
        [&](auto const& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FiniteMeetSemilattice>) {
            render_semilattice(out, block.name, v);
          } else if constexpr (std::is_same_v<T, FiniteGenBoolAlg>) {
            render_algebra(out, block.name, v);
          } else if constexpr (std::is_same_v<T, FiniteInverseSemigroup>) {
            render_semigroup(out, block.name, v);
          } else if constexpr (std::is_same_v<T, RepresentationBlock>) {
            render_representation(out, block.name, v.domain, v.codomain, v.value);
          } else {
            render_homomorphism(out, block.name, v.domain, v.codomain, v.value);
          }
        },
        block.content);
  }
  return out.str();
}

}  // namespace tightrep
