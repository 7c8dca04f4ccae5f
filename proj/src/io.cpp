#include "cubik/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cubik {

namespace {

// ids must be unique and free of whitespace; fall back to canonical names
template <typename Complex, typename Id>
std::map<Id, std::string> stable_ids(const Complex& X, const char* prefix) {
  std::map<Id, std::string> ids;
  std::set<std::string> seen;
  bool ok = true;
  for (int n = 0; n <= X.dim_bound() && ok; ++n)
    for (int k = 0; k < X.count(n) && ok; ++k) {
      const std::string& nm = X.name(Id{n, k});
      if (nm.empty() || nm.find(' ') != std::string::npos || !seen.insert(nm).second) ok = false;
    }
  for (int n = 0; n <= X.dim_bound(); ++n)
    for (int k = 0; k < X.count(n); ++k) {
      Id id{n, k};
      ids[id] = ok ? X.name(id)
                   : (std::string(prefix) + std::to_string(n) + "_" + std::to_string(k));
    }
  return ids;
}

template <typename Id>
std::vector<Id> sorted_ids(const std::map<Id, std::string>& ids, int dim) {
  std::vector<std::pair<std::string, Id>> level;
  for (const auto& [id, nm] : ids)
    if (id.dim == dim) level.emplace_back(nm, id);
  std::sort(level.begin(), level.end());
  std::vector<Id> out;
  for (auto& [nm, id] : level) out.push_back(id);
  return out;
}

}  // namespace

std::string serialize_cub(const CubicalComplex& X, const std::string& name,
                          const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "complex " << (name.empty() ? "unnamed" : name) << " dim "
     << std::max(0, X.dim_bound()) << "\n";
  for (const std::string& c : comments) os << "# " << c << "\n";
  auto ids = stable_ids<CubicalComplex, CubeId>(X, "c");
  for (int n = 0; n <= X.dim_bound(); ++n)
    for (CubeId id : sorted_ids(ids, n)) os << "cube " << ids[id] << " " << n << "\n";
  for (int n = 1; n <= X.dim_bound(); ++n)
    for (CubeId id : sorted_ids(ids, n))
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          const CubeRef& f = X.face(id, i, e);
          os << "face " << ids[id] << " " << i << " " << e << " -> " << ids[f.target] << " ["
             << render(f.op) << "]\n";
        }
  for (const CubeId& m : X.marked_edges()) os << "mark " << ids[m] << "\n";
  return os.str();
}

ComplexPtr parse_cub(const std::string& text, std::string* name_out) {
  auto X = std::make_shared<CubicalComplex>();
  std::map<std::string, CubeId> ids;
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> deferred;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string verb;
    ls >> verb;
    if (verb == "complex") {
      std::string nm;
      ls >> nm;
      if (name_out) *name_out = nm;
    } else if (verb == "cube") {
      std::string id;
      int n;
      if (!(ls >> id >> n)) throw ParseError("bad cube line: " + line);
      if (ids.count(id)) throw ParseError("duplicate cube id: " + id);
      ids[id] = X->add_cube(n, id);
    } else if (verb == "face") {
      deferred.push_back(line);
    } else if (verb == "mark") {
      deferred.push_back(line);
    } else {
      throw ParseError("unknown directive: " + verb);
    }
  }
  for (const std::string& l : deferred) {
    std::istringstream ls(l);
    std::string verb;
    ls >> verb;
    if (verb == "face") {
      std::string id, arrow, target;
      int i, e;
      if (!(ls >> id >> i >> e >> arrow >> target) || arrow != "->")
        throw ParseError("bad face line: " + l);
      std::string word;
      std::getline(ls, word);
      auto lb = word.find('[');
      auto rb = word.rfind(']');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError("face line missing operator word: " + l);
      word = word.substr(lb + 1, rb - lb - 1);
      if (!ids.count(id) || !ids.count(target)) throw ParseError("unknown id in face line: " + l);
      CubeId x = ids.at(id);
      BoxOp op = parse_boxop(word, x.dim - 1);
      if (!op.in_box_minus()) throw ParseError("face operator is not degenerate-only: " + l);
      X->set_face(x, i, e, CubeRef{ids.at(target), op});
    } else {
      std::string id;
      ls >> id;
      if (!ids.count(id)) throw ParseError("unknown id in mark line: " + l);
      X->mark_edge(ids.at(id));
    }
  }
  ValidationReport r = validate(*X);
  if (!r.ok) throw ParseError("parsed complex is invalid: " + r.message);
  return X;
}

std::string serialize_sim(const SimplicialComplex& S, const std::string& name,
                          const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "complex " << (name.empty() ? "unnamed" : name) << " dim "
     << std::max(0, S.dim_bound()) << "\n";
  for (const std::string& c : comments) os << "# " << c << "\n";
  auto ids = stable_ids<SimplicialComplex, SimpId>(S, "s");
  for (int n = 0; n <= S.dim_bound(); ++n)
    for (SimpId id : sorted_ids(ids, n)) os << "simplex " << ids[id] << " " << n << "\n";
  for (int n = 1; n <= S.dim_bound(); ++n)
    for (SimpId id : sorted_ids(ids, n))
      for (int i = 0; i <= n; ++i) {
        const SimpRef& f = S.face(id, i);
        os << "dface " << ids[id] << " " << i << " -> " << ids[f.target] << " ["
           << render(f.op) << "]\n";
      }
  return os.str();
}

SimpPtr parse_sim(const std::string& text, std::string* name_out) {
  auto S = std::make_shared<SimplicialComplex>();
  std::map<std::string, SimpId> ids;
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> deferred;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string verb;
    ls >> verb;
    if (verb == "complex") {
      std::string nm;
      ls >> nm;
      if (name_out) *name_out = nm;
    } else if (verb == "simplex") {
      std::string id;
      int n;
      if (!(ls >> id >> n)) throw ParseError("bad simplex line: " + line);
      if (ids.count(id)) throw ParseError("duplicate simplex id: " + id);
      ids[id] = S->add_simplex(n, id);
    } else if (verb == "dface") {
      deferred.push_back(line);
    } else {
      throw ParseError("unknown directive: " + verb);
    }
  }
  for (const std::string& l : deferred) {
    std::istringstream ls(l);
    std::string verb, id, arrow, target;
    int i;
    ls >> verb >> id >> i >> arrow >> target;
    if (arrow != "->") throw ParseError("bad dface line: " + l);
    std::string word;
    std::getline(ls, word);
    auto lb = word.find('[');
    auto rb = word.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos) throw ParseError("bad word: " + l);
    word = word.substr(lb + 1, rb - lb - 1);
    SimpId x = ids.at(id);
    SimpOp op = parse_simpop(word, x.dim - 1);
    S->set_face(x, i, SimpRef{ids.at(target), op});
  }
  ValidationReport r = validate(*S);
  if (!r.ok) throw ParseError("parsed complex is invalid: " + r.message);
  return S;
}

}  // namespace cubik
