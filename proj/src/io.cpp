#include "retic/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace retic {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw error(errc::parse, "input is not well-formed JSON");
  if (!j.is_object()) throw error(errc::parse, "input is not a JSON object");
  return j;
}

void flatten_table(const json& node, int arity, int n, std::vector<int>& out,
                   const std::string& opname) {
  if (arity == 0) {
    if (!node.is_number_integer())
      throw error(errc::parse, "constant table for " + opname + " must be an integer");
    out.push_back(node.get<int>());
    return;
  }
  if (!node.is_array() || static_cast<int>(node.size()) != n)
    throw error(errc::arity_mismatch,
                "table for " + opname + " has wrong nesting depth or width");
  for (const auto& sub : node) flatten_table(sub, arity - 1, n, out, opname);
}

json nest_table(const std::vector<int>& flat, int arity, int n, size_t& pos) {
  if (arity == 0) return flat[pos++];
  json arr = json::array();
  for (int i = 0; i < n; ++i) arr.push_back(nest_table(flat, arity - 1, n, pos));
  return arr;
}

}  // namespace

FiniteAlgebra parse_algebra(const std::string& text) {
  json j = parse_json(text);
  if (j.value("kind", "") != "algebra")
    throw error(errc::parse, "expected kind=\"algebra\"");
  FiniteAlgebra a;
  a.name = j.value("name", "unnamed");
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw error(errc::parse, a.name + ": missing integer size");
  a.n = j["size"].get<int>();
  for (const auto& oj : j.value("ops", json::array())) {
    Operation op;
    op.name = oj.value("name", "");
    if (op.name.empty()) throw error(errc::parse, a.name + ": operation without a name");
    if (!oj.contains("arity") || !oj["arity"].is_number_integer())
      throw error(errc::parse, a.name + ": operation " + op.name + " without arity");
    op.arity = oj["arity"].get<int>();
    if (op.arity < 0)
      throw error(errc::arity_mismatch, a.name + ": negative arity for " + op.name);
    if (!oj.contains("table"))
      throw error(errc::parse, a.name + ": operation " + op.name + " without table");
    flatten_table(oj["table"], op.arity, a.n, op.table, op.name);
    a.ops.push_back(std::move(op));
  }
  for (const auto& t : j.value("tags", json::array())) a.tags.push_back(t.get<std::string>());
  validate_algebra(a);
  return a;
}

std::string serialize_algebra(const FiniteAlgebra& a) {
  json j;
  j["kind"] = "algebra";
  j["name"] = a.name;
  j["size"] = a.n;
  j["ops"] = json::array();
  for (const auto& op : a.ops) {
    size_t pos = 0;
    j["ops"].push_back(
        {{"name", op.name}, {"arity", op.arity}, {"table", nest_table(op.table, op.arity, a.n, pos)}});
  }
  if (!a.tags.empty()) j["tags"] = a.tags;
  return j.dump(2) + "\n";
}

CommutatorStructure parse_structure(const std::string& text) {
  json j = parse_json(text);
  if (j.value("kind", "") != "commutator-structure")
    throw error(errc::parse, "expected kind=\"commutator-structure\"");
  std::string name = j.value("name", "unnamed");
  std::vector<std::string> names;
  for (const auto& e : j.value("elements", json::array()))
    names.push_back(e.get<std::string>());
  int m = static_cast<int>(names.size());
  if (m == 0) throw error(errc::parse, name + ": no elements");
  std::map<std::string, int> idx;
  for (int i = 0; i < m; ++i) {
    if (idx.count(names[i])) throw error(errc::parse, name + ": duplicate element " + names[i]);
    idx[names[i]] = i;
  }
  auto lookup = [&idx, &name](const std::string& label) {
    auto it = idx.find(label);
    if (it == idx.end()) throw error(errc::parse, name + ": unknown element " + label);
    return it->second;
  };

  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) leq[i][i] = true;
  for (const auto& pr : j.value("leq", json::array())) {
    if (!pr.is_array() || pr.size() != 2)
      throw error(errc::parse, name + ": leq entries must be pairs");
    leq[lookup(pr[0].get<std::string>())][lookup(pr[1].get<std::string>())] = true;
  }
  for (bool grew = true; grew;) {  // transitive closure
    grew = false;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (leq[x][y])
          for (int z = 0; z < m; ++z)
            if (leq[y][z] && !leq[x][z]) {
              leq[x][z] = true;
              grew = true;
            }
  }

  CommutatorStructure s;
  s.name = name;
  s.labels = names;
  s.leq = leq;
  for (int x = 0; x < m; ++x) {
    if (std::all_of(leq[x].begin(), leq[x].end(), [](bool b) { return b; })) s.bottom = x;
    bool top = true;
    for (int y = 0; y < m; ++y)
      if (!leq[y][x]) top = false;
    if (top) s.top = x;
  }
  if (s.bottom < 0 || s.top < 0)
    throw error(errc::lattice_law, name + ": order has no bottom or no top");
  complete_lattice_tables(s);

  s.comm_tab = s.meet_tab;  // sparse default
  std::vector<std::vector<bool>> given(m, std::vector<bool>(m, false));
  json commj = j.value("commutator", json::object());
  for (const auto& [key, val] : commj.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw error(errc::parse, name + ": commutator keys look like \"x,y\"");
    int x = lookup(key.substr(0, comma));
    int y = lookup(key.substr(comma + 1));
    int v = lookup(val.get<std::string>());
    if (given[x][y] && s.comm_tab[x][y] != v)
      throw error(errc::parse, name + ": conflicting commutator entries for " + key);
    given[x][y] = given[y][x] = true;
    s.comm_tab[x][y] = s.comm_tab[y][x] = v;  // symmetric completion
  }

  s.in_k.assign(m, false);
  for (const auto& e : j.value("compact", json::array())) s.in_k[lookup(e.get<std::string>())] = true;
  if (j.contains("principal")) {
    s.in_p.assign(m, false);
    for (const auto& e : j["principal"]) s.in_p[lookup(e.get<std::string>())] = true;
  } else {
    s.in_p = s.in_k;  // P defaults to K
  }
  std::string mode = j.value("mode", "strict");
  if (mode != "strict" && mode != "lax")
    throw error(errc::parse, name + ": mode must be strict or lax");
  s.strict = (mode == "strict");

  // canonical order: topological in the lattice order, ties by name
  std::vector<int> order;
  std::vector<bool> placed(m, false);
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int x = 0; x < m; ++x) {
      if (placed[x]) continue;
      bool ready = true;
      for (int y = 0; y < m; ++y)
        if (!placed[y] && y != x && leq[y][x]) ready = false;
      if (!ready) continue;
      if (pick == -1 || s.labels[x] < s.labels[pick]) pick = x;
    }
    if (pick == -1) throw error(errc::lattice_law, name + ": order contains a cycle");
    placed[pick] = true;
    order.push_back(pick);
  }
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;

  CommutatorStructure t;
  t.name = s.name;
  t.strict = s.strict;
  t.labels.resize(m);
  t.leq.assign(m, std::vector<bool>(m, false));
  t.join_tab.assign(m, std::vector<int>(m, -1));
  t.meet_tab.assign(m, std::vector<int>(m, -1));
  t.comm_tab.assign(m, std::vector<int>(m, -1));
  t.in_k.assign(m, false);
  t.in_p.assign(m, false);
  for (int i = 0; i < m; ++i) {
    t.labels[i] = s.labels[order[i]];
    t.in_k[i] = s.in_k[order[i]];
    t.in_p[i] = s.in_p[order[i]];
    for (int jj = 0; jj < m; ++jj) {
      t.leq[i][jj] = s.leq[order[i]][order[jj]];
      t.join_tab[i][jj] = pos[s.join_tab[order[i]][order[jj]]];
      t.meet_tab[i][jj] = pos[s.meet_tab[order[i]][order[jj]]];
      t.comm_tab[i][jj] = pos[s.comm_tab[order[i]][order[jj]]];
    }
  }
  t.bottom = pos[s.bottom];
  t.top = pos[s.top];
  validate_structure(t);
  return t;
}

std::string serialize_structure(const CommutatorStructure& s) {
  json j;
  j["kind"] = "commutator-structure";
  j["name"] = s.name;
  j["elements"] = s.labels;
  json leq = json::array();
  int m = s.size();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && s.le(x, y)) leq.push_back({s.labels[x], s.labels[y]});
  j["leq"] = leq;
  json comm = json::object();
  for (int x = 0; x < m; ++x)
    for (int y = x; y < m; ++y)
      if (s.comm(x, y) != s.meet(x, y))
        comm[s.labels[x] + "," + s.labels[y]] = s.labels[s.comm(x, y)];
  j["commutator"] = comm;
  json compact = json::array(), principal = json::array();
  for (int x = 0; x < m; ++x) {
    if (s.in_k[x]) compact.push_back(s.labels[x]);
    if (s.in_p[x]) principal.push_back(s.labels[x]);
  }
  j["compact"] = compact;
  j["principal"] = principal;
  j["mode"] = s.strict ? "strict" : "lax";
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_input, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw error(errc::invalid_input, "cannot write " + path);
  out << text;
}

Loaded load_file(const std::string& path) {
  std::string text = read_text_file(path);
  json j = parse_json(text);
  std::string kind = j.value("kind", "");
  if (kind == "algebra") return parse_algebra(text);
  if (kind == "commutator-structure") return parse_structure(text);
  throw error(errc::parse, path + ": unknown kind \"" + kind + "\"");
}

std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << "[";
  bool first_class = true;
  for (const auto& cls : p.classes()) {
    if (!first_class) os << ",";
    first_class = false;
    os << "[";
    for (size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << cls[i];
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

std::vector<std::pair<int, int>> cover_edges(const std::vector<std::vector<bool>>& leq) {
  int m = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || !leq[x][y]) continue;
      bool cover = true;
      for (int z = 0; z < m && cover; ++z)
        if (z != x && z != y && leq[x][z] && leq[z][y]) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace

std::string dot_lattice(const std::vector<std::string>& labels,
                        const std::vector<std::vector<bool>>& leq, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (auto [x, y] : cover_edges(leq)) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_specialization(const std::vector<std::string>& labels,
                               const std::vector<std::vector<bool>>& closure_leq,
                               const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (size_t i = 0; i < labels.size(); ++i)
    os << "  p" << i << " [label=\"" << labels[i] << "\"];\n";
  for (auto [x, y] : cover_edges(closure_leq)) os << "  p" << x << " -> p" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace retic
