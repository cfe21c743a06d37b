#pragma once

// The workspace file format: a strict line-oriented description of a field,
// a quiver with relations, named modules, subcategories, Hovey triples, a
// test-object registry and optional user witness tables. Unknown keys are
// rejected; errors carry line numbers. The exact grammar is documented in
// the repository README.

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "homcat/cotorsion.hpp"

namespace homcat {

struct ParseError : std::runtime_error {
  explicit ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("parse-error: line " + std::to_string(line) + ": " + msg) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(std::size_t line, const std::string& msg)
      : std::runtime_error("validation-error: line " + std::to_string(line) + ": " + msg) {}
};

struct HoveyDecl {
  std::string name;
  std::string cofibrant, trivial, fibrant;
  std::string witnesses;  // "trivial" | "frobenius" | "table NAME"
};

class Workspace {
 public:
  std::shared_ptr<Cat> cat;
  std::vector<std::pair<std::string, Module>> modules;
  std::vector<std::pair<std::string, Subcategory>> subcategories;
  std::vector<HoveyDecl> hovey_decls;
  std::vector<Module> registry;
  std::map<std::string, std::map<std::string, std::pair<Conflation, Conflation>>> witness_tables;

  const Algebra& algebra() const { return cat->algebra(); }

  const Module& module_by_name(const std::string& name) const {
    for (const auto& [n, m] : modules)
      if (n == name) return m;
    throw std::runtime_error("unresolved-name: module '" + name + "'");
  }

  Subcategory subcat_by_name(const std::string& name) const {
    if (name == "all") return Subcategory::all();
    for (const auto& [n, s] : subcategories)
      if (n == name) return s;
    throw std::runtime_error("unresolved-name: subcategory '" + name + "'");
  }

  const HoveyDecl& hovey_by_name(const std::string& name) const {
    for (const HoveyDecl& h : hovey_decls)
      if (h.name == name) return h;
    throw std::runtime_error("unresolved-name: hovey triple '" + name + "'");
  }

  WitnessProvider provider_for(const HoveyDecl& h) const {
    if (h.witnesses == "trivial") return WitnessProvider::trivial();
    if (h.witnesses == "frobenius") return WitnessProvider::frobenius_provider();
    if (h.witnesses.rfind("table ", 0) == 0) {
      std::string key = h.witnesses.substr(6);
      auto it = witness_tables.find(key);
      if (it == witness_tables.end())
        throw std::runtime_error("unresolved-name: witness table '" + key + "'");
      return WitnessProvider::user(it->second);
    }
    throw std::runtime_error("unresolved-name: witness provider '" + h.witnesses + "'");
  }

  HoveyTripleData make_triple(const HoveyDecl& h) const {
    return make_hovey_triple(*cat, h.name, subcat_by_name(h.cofibrant),
                             subcat_by_name(h.trivial), subcat_by_name(h.fibrant),
                             provider_for(h), registry);
  }
};

namespace ws_detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Parses "[[a,b],[c,d]]" (entries through the field's scalar parser).
inline Matrix parse_matrix(const std::string& text, std::size_t rows, std::size_t cols,
                           const FieldSpec& field, std::size_t line) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw ParseError(line, "expected a matrix literal");
  if (s == "[]" || s == "[[]]") {
    if (rows != 0 && cols != 0 && rows * cols != 0)
      throw ParseError(line, "matrix literal [] used where a " + std::to_string(rows) + "x" +
                                 std::to_string(cols) + " matrix is required");
    return Matrix(rows, cols, field);
  }
  if (s.front() != '[' || s.back() != ']') throw ParseError(line, "matrix must be [...]-bracketed");
  Matrix m(rows, cols, field);
  std::size_t i = 1, row = 0;
  while (i < s.size() - 1) {
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != '[') throw ParseError(line, "expected '[' to open a matrix row");
    std::size_t j = s.find(']', i);
    if (j == std::string::npos) throw ParseError(line, "unterminated matrix row");
    std::string rowtext = s.substr(i + 1, j - i - 1);
    if (row >= rows) throw ParseError(line, "too many matrix rows");
    std::size_t col = 0;
    if (!rowtext.empty()) {
      std::istringstream in(rowtext);
      std::string entry;
      while (std::getline(in, entry, ',')) {
        if (col >= cols) throw ParseError(line, "too many entries in matrix row");
        try {
          m.set(row, col, field.parse(entry));
        } catch (const std::exception& e) {
          throw ParseError(line, std::string("bad matrix entry '") + entry + "'");
        }
        ++col;
      }
    }
    if (col != cols)
      throw ParseError(line, "matrix row has " + std::to_string(col) + " entries, expected " +
                                 std::to_string(cols));
    ++row;
    i = j + 1;
  }
  if (row != rows)
    throw ParseError(line, "matrix has " + std::to_string(row) + " rows, expected " +
                               std::to_string(rows));
  return m;
}

}  // namespace ws_detail

inline Workspace parse_workspace_text(const std::string& text) {
  using ws_detail::parse_matrix;
  using ws_detail::split_ws;
  using ws_detail::trim;

  std::vector<std::pair<std::size_t, std::string>> lines;  // (lineno, content)
  {
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
      ++no;
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      raw = trim(raw);
      if (!raw.empty()) lines.emplace_back(no, raw);
    }
  }

  Workspace ws;
  FieldSpec field = FieldSpec::gf(2);
  bool have_field = false;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::size_t path_cap = 4;
  std::vector<std::pair<std::size_t, std::string>> relation_lines;
  bool algebra_built = false;

  auto vertex_index = [&](const std::string& label, std::size_t line) {
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (vertices[v] == label) return v;
    throw ParseError(line, "unknown vertex '" + label + "'");
  };

  auto build_algebra_now = [&](std::size_t line) {
    if (algebra_built) return;
    if (!have_field) throw ParseError(line, "a [field] section must precede modules");
    if (vertices.empty()) throw ParseError(line, "a [quiver] section must precede modules");
    std::vector<Relation> rels;
    for (const auto& [no, rl] : relation_lines) {
      try {
        rels.push_back(Algebra::parse_relation(arrows, field, rl));
      } catch (const std::exception& e) {
        throw ParseError(no, e.what());
      }
    }
    try {
      ws.cat = std::make_shared<Cat>(Algebra::build(field, vertices, arrows, rels, path_cap));
    } catch (const std::exception& e) {
      throw ValidationError(line, e.what());
    }
    algebra_built = true;
  };

  std::string section;    // current section kind
  std::string sec_name;   // current section argument
  std::size_t sec_line = 0;

  // Module-in-progress state.
  bool module_open = false;
  bool module_built = false;
  std::vector<std::size_t> mod_dims;
  std::map<std::string, std::pair<std::size_t, std::string>> mod_actions;  // arrow -> (line, literal)

  // Witness-table-in-progress state.
  std::string wit_kind;     // "proj" or "inj"
  std::string wit_object;
  Module wit_outer, wit_middle;
  std::map<std::string, std::pair<std::size_t, std::string>> wit_first, wit_second;
  std::size_t wit_line = 0;

  auto finish_witness_entry = [&]() {
    if (wit_kind.empty()) return;
    const Module& obj = ws.module_by_name(wit_object);
    const Algebra& alg = ws.cat->algebra();
    auto build_map = [&](const Module& src, const Module& tgt,
                         std::map<std::string, std::pair<std::size_t, std::string>>& table) {
      std::vector<Matrix> maps;
      for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
        auto it = table.find(alg.vertices()[v]);
        if (it == table.end())
          maps.push_back(Matrix(tgt.dim(v), src.dim(v), alg.field()));
        else
          maps.push_back(parse_matrix(it->second.second, tgt.dim(v), src.dim(v), alg.field(),
                                      it->second.first));
      }
      try {
        return ModuleMorphism(src, tgt, maps);
      } catch (const std::exception& e) {
        throw ValidationError(wit_line, e.what());
      }
    };
    // proj OBJ = END MIDDLE declares END >-> MIDDLE ->> OBJ;
    // inj OBJ = END MIDDLE declares OBJ >-> MIDDLE ->> END.
    Conflation c = wit_kind == "proj"
                       ? Conflation{build_map(wit_outer, wit_middle, wit_first),
                                    build_map(wit_middle, obj, wit_second)}
                       : Conflation{build_map(obj, wit_middle, wit_first),
                                    build_map(wit_middle, wit_outer, wit_second)};
    if (!is_conflation(c)) throw ValidationError(wit_line, "witness entry is not a conflation");
    auto& entry = ws.witness_tables[sec_name];
    if (wit_kind == "proj") {
      auto it = entry.find(obj.key());
      Conflation inj = it == entry.end() ? c : it->second.second;
      entry.insert_or_assign(obj.key(), std::make_pair(c, inj));
    } else {
      auto it = entry.find(obj.key());
      Conflation proj = it == entry.end() ? c : it->second.first;
      entry.insert_or_assign(obj.key(), std::make_pair(proj, c));
    }
    wit_kind.clear();
    wit_first.clear();
    wit_second.clear();
  };

  auto finish_module = [&]() {
    if (!module_open || module_built) return;
    const Algebra& alg = ws.cat->algebra();
    std::vector<Matrix> actions;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
      const Arrow& ar = alg.arrows()[a];
      auto it = mod_actions.find(alg.arrows()[a].label);
      if (it == mod_actions.end())
        actions.push_back(Matrix(mod_dims[ar.tgt], mod_dims[ar.src], alg.field()));
      else
        actions.push_back(parse_matrix(it->second.second, mod_dims[ar.tgt], mod_dims[ar.src],
                                       alg.field(), it->second.first));
    }
    try {
      ws.modules.emplace_back(sec_name,
                              Module(ws.cat->algebra(), mod_dims, actions, sec_name));
    } catch (const std::exception& e) {
      throw ValidationError(sec_line, e.what());
    }
    module_built = true;
  };

  auto close_section = [&]() {
    if (section == "module") finish_module();
    if (section == "witness") finish_witness_entry();
    module_open = false;
    module_built = false;
    mod_actions.clear();
  };

  for (const auto& [no, line] : lines) {
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(no, "unterminated section header");
      close_section();
      std::string inner = trim(line.substr(1, line.size() - 2));
      std::vector<std::string> parts = split_ws(inner);
      if (parts.empty()) throw ParseError(no, "empty section header");
      section = parts[0];
      sec_name = parts.size() > 1 ? parts[1] : "";
      sec_line = no;
      if (section == "module") {
        if (sec_name.empty()) throw ParseError(no, "module section needs a name");
        build_algebra_now(no);
        module_open = true;
        module_built = false;
        mod_dims.assign(ws.cat->algebra().vertex_count(), 0);
        mod_actions.clear();
      } else if (section == "subcategory" || section == "hovey" || section == "witness") {
        if (sec_name.empty()) throw ParseError(no, section + " section needs a name");
        build_algebra_now(no);
        if (section == "hovey")
          ws.hovey_decls.push_back(HoveyDecl{sec_name, "all", "all", "all", "trivial"});
        if (section == "witness") ws.witness_tables[sec_name];
      } else if (section == "registry") {
        build_algebra_now(no);
      } else if (section != "field" && section != "quiver" && section != "relations") {
        throw ParseError(no, "unknown section [" + section + "]");
      }
      continue;
    }
    std::vector<std::string> tok = split_ws(line);
    if (section == "field") {
      if (tok[0] == "prime" && tok.size() == 2) {
        try {
          field = FieldSpec::gf(std::stoll(tok[1]));
        } catch (const std::exception& e) {
          throw ParseError(no, e.what());
        }
        have_field = true;
      } else if (tok[0] == "rationals" && tok.size() == 1) {
        field = FieldSpec::rationals();
        have_field = true;
      } else {
        throw ParseError(no, "unknown field line '" + line + "'");
      }
    } else if (section == "quiver") {
      if (tok[0] == "vertices") {
        for (std::size_t i = 1; i < tok.size(); ++i) vertices.push_back(tok[i]);
      } else if (tok[0] == "arrow" && tok.size() == 4) {
        arrows.push_back(Arrow{tok[1], vertex_index(tok[2], no), vertex_index(tok[3], no)});
      } else if (tok[0] == "path_cap" && tok.size() == 2) {
        path_cap = static_cast<std::size_t>(std::stoull(tok[1]));
      } else {
        throw ParseError(no, "unknown quiver line '" + line + "'");
      }
    } else if (section == "relations") {
      relation_lines.emplace_back(no, line);
    } else if (section == "module") {
      if (tok[0] == "vertex" && tok.size() == 4 && tok[2] == "dim") {
        mod_dims[vertex_index(tok[1], no)] = static_cast<std::size_t>(std::stoull(tok[3]));
      } else if (tok[0] == "action" && tok.size() >= 3 && tok[2] == "=") {
        std::string label = tok[1];
        bool known = false;
        for (const Arrow& a : ws.cat->algebra().arrows()) known = known || a.label == label;
        if (!known) throw ParseError(no, "unknown arrow '" + label + "'");
        std::string literal = trim(line.substr(line.find('=') + 1));
        mod_actions[label] = {no, literal};
      } else if (tok[0] == "zero" && tok.size() == 1) {
        ws.modules.emplace_back(sec_name, Module::zero(ws.cat->algebra()).renamed(sec_name));
        module_built = true;
      } else if (tok[0] == "simple" && tok.size() == 2) {
        ws.modules.emplace_back(
            sec_name, Module::simple(ws.cat->algebra(), vertex_index(tok[1], no), sec_name));
        module_built = true;
      } else if (tok[0] == "projective" && tok.size() == 2) {
        ws.modules.emplace_back(
            sec_name, Module::projective(ws.cat->algebra(), vertex_index(tok[1], no), sec_name));
        module_built = true;
      } else if (tok[0] == "injective" && tok.size() == 2) {
        ws.modules.emplace_back(
            sec_name, Module::injective(ws.cat->algebra(), vertex_index(tok[1], no), sec_name));
        module_built = true;
      } else if (tok[0] == "sum" && tok.size() >= 2) {
        std::vector<Module> parts;
        for (std::size_t i = 1; i < tok.size(); ++i) parts.push_back(ws.module_by_name(tok[i]));
        ws.modules.emplace_back(
            sec_name, direct_sum(parts, ws.cat->algebra()).sum.renamed(sec_name));
        module_built = true;
      } else {
        throw ParseError(no, "unknown module line '" + line + "'");
      }
    } else if (section == "subcategory") {
      if (tok[0] == "all" && tok.size() == 1) {
        ws.subcategories.emplace_back(sec_name, Subcategory::all(sec_name));
      } else if (tok[0] == "generators" && tok.size() >= 2) {
        std::vector<Module> gens;
        for (std::size_t i = 1; i < tok.size(); ++i) gens.push_back(ws.module_by_name(tok[i]));
        ws.subcategories.emplace_back(sec_name, Subcategory::add(sec_name, gens));
      } else {
        throw ParseError(no, "unknown subcategory line '" + line + "'");
      }
    } else if (section == "hovey") {
      HoveyDecl& h = ws.hovey_decls.back();
      if (tok[0] == "cofibrant" && tok.size() == 2)
        h.cofibrant = tok[1];
      else if (tok[0] == "trivial" && tok.size() == 2)
        h.trivial = tok[1];
      else if (tok[0] == "fibrant" && tok.size() == 2)
        h.fibrant = tok[1];
      else if (tok[0] == "witnesses" && tok.size() == 2)
        h.witnesses = tok[1];
      else if (tok[0] == "witnesses" && tok.size() == 3 && tok[1] == "table")
        h.witnesses = "table " + tok[2];
      else
        throw ParseError(no, "unknown hovey line '" + line + "'");
    } else if (section == "registry") {
      for (const std::string& t : tok) ws.registry.push_back(ws.module_by_name(t));
    } else if (section == "witness") {
      if ((tok[0] == "proj" || tok[0] == "inj") && tok.size() == 5 && tok[2] == "=") {
        finish_witness_entry();
        wit_kind = tok[0];
        wit_object = tok[1];
        wit_outer = ws.module_by_name(tok[3]);
        wit_middle = ws.module_by_name(tok[4]);
        wit_line = no;
      } else if ((tok[0] == "first" || tok[0] == "second") && tok.size() >= 3 && tok[2] == "=") {
        std::string literal = trim(line.substr(line.find('=') + 1));
        if (tok[0] == "first")
          wit_first[tok[1]] = {no, literal};
        else
          wit_second[tok[1]] = {no, literal};
      } else {
        throw ParseError(no, "unknown witness line '" + line + "'");
      }
    } else {
      throw ParseError(no, "content outside any section");
    }
  }
  close_section();
  if (!algebra_built) build_algebra_now(lines.empty() ? 0 : lines.back().first);
  return ws;
}

inline Workspace parse_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("parse-error: cannot open workspace file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace_text(buf.str());
}

}  // namespace homcat
