#include "kpar/gauss.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kpar {

void GaussDiagram::rebuild() {
  pos_.clear();
  arcs_.clear();
  std::map<int, std::map<char, int>> seen;
  for (int ci = 0; ci < (int)comps.size(); ++ci) {
    if (comps[ci].empty()) {
      // a bare circle still has one arc
      arcs_.push_back({ci, 0});
      continue;
    }
    for (int i = 0; i < (int)comps[ci].size(); ++i) {
      const Endpoint& e = comps[ci][i];
      auto key = std::make_pair(e.chord, e.role);
      if (pos_.count(key)) throw ParseError("role repeated for chord " + std::to_string(e.chord));
      pos_[key] = {ci, i};
      seen[e.chord][e.role]++;
      arcs_.push_back({ci, i});
    }
  }
  for (const auto& [c, roles] : seen) {
    if (roles.size() != 2)
      throw ParseError("dangling chord label " + std::to_string(c));
    if (!signs.count(c)) throw ParseError("missing sign for chord " + std::to_string(c));
  }
  if ((int)seen.size() != (int)signs.size())
    throw ParseError("sign table does not match endpoints");
  if (long_knot && comps.size() != 1) throw ParseError("long knot must have one component");
  narcs_ = (int)arcs_.size();
}

std::vector<int> GaussDiagram::chords() const {
  std::vector<int> out;
  out.reserve(signs.size());
  for (const auto& [c, s] : signs) out.push_back(c);
  return out;
}

int GaussDiagram::sign(int v) const {
  auto it = signs.find(v);
  if (it == signs.end()) throw std::out_of_range("unknown chord");
  return it->second;
}

const std::vector<Endpoint>& GaussDiagram::seq() const {
  if (comps.size() != 1) throw std::logic_error("single-component access on a link");
  return comps[0];
}

std::pair<int, int> GaussDiagram::where(int chord, char role) const {
  auto it = pos_.find({chord, role});
  if (it == pos_.end()) throw std::out_of_range("unknown endpoint");
  return it->second;
}

int GaussDiagram::pos(int chord, char role) const {
  auto [ci, i] = where(chord, role);
  if (ci != 0 || comps.size() != 1) throw std::logic_error("pos() needs a single component");
  return i;
}

int GaussDiagram::arc_id(int comp, int idx) const {
  int base = 0;
  for (int ci = 0; ci < comp; ++ci) base += std::max<int>(1, (int)comps[ci].size());
  return base + idx;
}

std::pair<int, int> GaussDiagram::arc_loc(int arc) const { return arcs_.at(arc); }

int GaussDiagram::arc_after(int chord, char role) const {
  auto [ci, i] = where(chord, role);
  return arc_id(ci, i);
}

int GaussDiagram::arc_before(int chord, char role) const {
  auto [ci, i] = where(chord, role);
  int n = (int)comps[ci].size();
  return arc_id(ci, (i - 1 + n) % n);
}

int GaussDiagram::base_arc() const {
  if (!long_knot) throw std::logic_error("base arc of a closed diagram");
  return narcs_ - 1;
}

GaussDiagram parse_gauss_code(const std::string& text_in) {
  std::string text = text_in;
  bool lng = false;
  // strip whitespace
  text.erase(std::remove_if(text.begin(), text.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             text.end());
  if (text.rfind("L:", 0) == 0) {
    lng = true;
    text = text.substr(2);
  }
  std::vector<std::vector<Endpoint>> comps;
  std::map<int, int> signs;
  std::map<int, int> flat_count;
  bool any_flat = false, any_round = false;
  std::vector<Endpoint> cur;
  size_t i = 0;
  auto flush = [&]() {
    if (cur.empty()) throw ParseError("empty component");
    comps.push_back(cur);
    cur.clear();
  };
  while (i < text.size()) {
    char t = text[i];
    if (t == '/') {
      flush();
      ++i;
      continue;
    }
    if (t != 'O' && t != 'U' && t != 'X') throw ParseError(std::string("bad token at '") + t + "'");
    ++i;
    size_t j = i;
    while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
    if (j == i) throw ParseError("missing chord label");
    int label = std::stoi(text.substr(i, j - i));
    i = j;
    int sgn = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sgn = text[i] == '+' ? 1 : -1;
      ++i;
    }
    char role;
    if (t == 'X') {
      any_flat = true;
      int k = flat_count[label]++;
      if (k > 1) throw ParseError("flat label used more than twice");
      role = k == 0 ? 'O' : 'U';
      if (sgn == 0) sgn = 1;  // flat tokens may omit the sign
    } else {
      any_round = true;
      role = t;
      if (sgn == 0) throw ParseError("missing sign on token");
    }
    auto it = signs.find(label);
    if (it != signs.end() && it->second != sgn)
      throw ParseError("sign mismatch on chord " + std::to_string(label));
    signs[label] = sgn;
    cur.push_back({label, role});
  }
  if (!cur.empty() || comps.empty()) {
    if (cur.empty() && comps.empty()) {
      // empty string: the unknot
      comps.push_back({});
    } else {
      flush();
    }
  }
  if (any_flat && any_round) throw ParseError("mixed flat and classical tokens");
  if (comps.size() == 1 && comps[0].empty()) comps[0].clear();
  GaussDiagram d(std::move(comps), std::move(signs), lng, any_flat);
  return d;
}

std::string emit_gauss_code(const GaussDiagram& d) {
  std::ostringstream os;
  if (d.long_knot) os << "L:";
  for (int ci = 0; ci < d.ncomps(); ++ci) {
    if (ci) os << "/";
    for (const Endpoint& e : d.comps[ci])
      os << e.role << e.chord << (d.sign(e.chord) > 0 ? '+' : '-');
  }
  return os.str();
}

GaussDiagram flatten(const GaussDiagram& d) {
  GaussDiagram out = d;
  out.flat = true;
  return out;
}

GaussDiagram switch_crossing(const GaussDiagram& d, int v) {
  GaussDiagram out = d;
  for (auto& comp : out.comps)
    for (auto& e : comp)
      if (e.chord == v) e.role = e.role == 'O' ? 'U' : 'O';
  out.signs[v] = -d.sign(v);
  out.rebuild();
  return out;
}

std::string canonical_code(const GaussDiagram& d) {
  // per component: minimal code over rotations, with chords renumbered by
  // first occurrence across the whole diagram; components kept in order
  // (fixtures and monodromy only need knots, where this is a full rotation
  // normal form).
  auto render = [&](const std::vector<std::vector<Endpoint>>& comps) {
    std::map<int, int> rename;
    std::ostringstream os;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      if (ci) os << "/";
      for (const Endpoint& e : comps[ci]) {
        auto it = rename.find(e.chord);
        int id;
        if (it == rename.end()) {
          id = (int)rename.size() + 1;
          rename[e.chord] = id;
        } else {
          id = it->second;
        }
        os << e.role << id << (d.sign(e.chord) > 0 ? '+' : '-');
      }
    }
    return os.str();
  };
  if (d.ncomps() != 1 || d.long_knot) return (d.long_knot ? "L:" : "") + render(d.comps);
  const auto& s = d.comps[0];
  std::string best;
  for (size_t r = 0; r < std::max<size_t>(s.size(), 1); ++r) {
    std::vector<Endpoint> rot(s.begin() + r, s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + r);
    std::string code = render({rot});
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::map<std::string, GaussDiagram> load_corpus(const std::string& path,
                                                std::vector<std::string>* errors) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::map<std::string, GaussDiagram> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      if (errors) errors->push_back("line " + std::to_string(lineno) + ": no tab separator");
      continue;
    }
    std::string name = line.substr(0, tab);
    std::string code = line.substr(tab + 1);
    if (out.count(name)) throw std::runtime_error("duplicate corpus name: " + name);
    try {
      out.emplace(name, parse_gauss_code(code));
    } catch (const ParseError& e) {
      if (errors) errors->push_back("line " + std::to_string(lineno) + " (" + name + "): " + e.what());
    }
  }
  return out;
}

}  // namespace kpar
