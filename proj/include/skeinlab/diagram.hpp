#pragma once

// Oriented link diagrams as planar-diagram (PD) codes with blackboard
// framing, plus the satellite surgeries used by the verifier.
//
// PD convention: each crossing lists four edge labels counterclockwise,
// starting at the incoming under-strand.  Edge labels are positive integers,
// consecutive (cyclically) along each oriented component.  Crossingless
// components are carried as free loops.  Component indices are 0-based in the
// C++ interface and 1-based in the JSON/CLI surface.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab {

class InvalidDiagram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Crossing {
  std::array<int, 4> edges{};
  int sign = 0;  // +1 / -1; 0 when it cannot be determined

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> issues;
  int components = 0;
  std::vector<int> self_writhe;
  int writhe = 0;
};

// Edge lineage used to keep numbering stable across surgeries: pieces created
// by splitting an edge extend its tag, so lexicographic order follows the
// strand and the smallest tag in a component marks where numbering starts.
using EdgeTag = std::vector<int>;

// A bundle entry is an edge label (> 0) or a crossingless component c encoded
// as -(c + 1).  Entries are ordered by offset: each next entry lies to the
// left of the previous one.
using Bundle = std::vector<int>;

class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Signs are derived from the strand orientations implied by the numbering.
  static LinkDiagram from_pd(std::string name, int components,
                             std::vector<std::array<int, 4>> crossings,
                             std::map<int, int> component_of_edge,
                             std::map<int, int> free_loops) {
    LinkDiagram d;
    d.name_ = std::move(name);
    d.ncomp_ = components;
    d.edge_comp_ = std::move(component_of_edge);
    d.loops_ = std::move(free_loops);
    for (auto& e : crossings) d.xs_.push_back({e, 0});
    std::vector<std::string> issues;
    auto signs = d.derive_signs(issues);
    for (std::size_t i = 0; i < d.xs_.size(); ++i) d.xs_[i].sign = signs[i];
    return d;
  }

  static LinkDiagram unlink(int n, std::string name = "") {
    LinkDiagram d;
    d.name_ = std::move(name);
    d.ncomp_ = n;
    for (int c = 0; c < n; ++c) d.loops_[c] = 1;
    return d;
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int num_components() const { return ncomp_; }
  std::size_t num_crossings() const { return xs_.size(); }
  const std::vector<Crossing>& crossings() const { return xs_; }
  const std::map<int, int>& component_of_edge() const { return edge_comp_; }
  const std::map<int, int>& free_loops() const { return loops_; }
  const std::vector<Bundle>& bundles() const { return bundles_; }
  int component_of(int edge) const {
    auto it = edge_comp_.find(edge);
    if (it == edge_comp_.end()) throw InvalidDiagram("unknown edge " + std::to_string(edge));
    return it->second;
  }
  int free_loop_count() const {
    int n = 0;
    for (auto [c, k] : loops_) n += k;
    return n;
  }
  EdgeTag tag_of(int edge) const {
    auto it = tags_.find(edge);
    return it == tags_.end() ? EdgeTag{edge} : it->second;
  }

  // Structural equality of the PD data (name, metadata and tags ignored).
  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.ncomp_ == b.ncomp_ && a.xs_ == b.xs_ && a.edge_comp_ == b.edge_comp_ &&
           a.loops_ == b.loops_;
  }

  ValidationReport validate() const {
    ValidationReport r;
    r.components = ncomp_;
    std::vector<std::string>& issues = r.issues;
    auto signs = derive_signs(issues);
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (signs[i] != 0 && xs_[i].sign != signs[i])
        issues.push_back("crossing " + std::to_string(i) + ": stored sign " +
                         std::to_string(xs_[i].sign) + " does not match orientation");
    }
    std::vector<int> edges_in(static_cast<std::size_t>(std::max(ncomp_, 0)), 0);
    for (auto [e, c] : edge_comp_)
      if (c >= 0 && c < ncomp_) ++edges_in[static_cast<std::size_t>(c)];
    for (auto [c, k] : loops_) {
      if (c < 0 || c >= ncomp_) {
        issues.push_back("free loop on unknown component " + std::to_string(c));
      } else if (k != 1) {
        issues.push_back("component " + std::to_string(c) + ": free loop count must be 1");
      } else if (edges_in[static_cast<std::size_t>(c)] != 0) {
        issues.push_back("component " + std::to_string(c) + " has both edges and a free loop");
      }
    }
    for (int c = 0; c < ncomp_; ++c) {
      if (edges_in[static_cast<std::size_t>(c)] == 0 && !loops_.count(c))
        issues.push_back("component " + std::to_string(c) + " is empty");
    }
    r.self_writhe.assign(static_cast<std::size_t>(std::max(ncomp_, 0)), 0);
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      r.writhe += signs[i];
      auto a = edge_comp_.find(xs_[i].edges[0]);
      auto b = edge_comp_.find(xs_[i].edges[1]);
      if (a != edge_comp_.end() && b != edge_comp_.end() && a->second == b->second &&
          a->second >= 0 && a->second < ncomp_)
        r.self_writhe[static_cast<std::size_t>(a->second)] += signs[i];
    }
    r.valid = issues.empty();
    return r;
  }

  void require_valid() const {
    auto r = validate();
    if (!r.valid) {
      std::string msg = "invalid diagram";
      if (!name_.empty()) msg += " '" + name_ + "'";
      for (const auto& s : r.issues) msg += "; " + s;
      throw InvalidDiagram(msg);
    }
  }

  // Face count check (Euler characteristic of each connected piece).  Not part
  // of validation proper; the surgeries are tested against it.
  bool is_planar() const {
    const std::size_t n = xs_.size();
    if (n == 0) return true;
    std::map<int, std::vector<std::pair<int, int>>> where;
    for (std::size_t x = 0; x < n; ++x)
      for (int k = 0; k < 4; ++k) where[xs_[x].edges[static_cast<std::size_t>(k)]].push_back({int(x), k});
    auto other = [&](int x, int k) {
      const auto& w = where[xs_[static_cast<std::size_t>(x)].edges[static_cast<std::size_t>(k)]];
      if (w.size() != 2) throw InvalidDiagram("edge does not appear twice");
      return (w[0].first == x && w[0].second == k) ? w[1] : w[0];
    };
    std::vector<int> piece(n, -1);
    int pieces = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (piece[s] >= 0) continue;
      std::vector<int> stack{int(s)};
      piece[s] = pieces;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
          int y = other(x, k).first;
          if (piece[static_cast<std::size_t>(y)] < 0) {
            piece[static_cast<std::size_t>(y)] = pieces;
            stack.push_back(y);
          }
        }
      }
      ++pieces;
    }
    std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
    std::vector<int> faces(static_cast<std::size_t>(pieces), 0);
    std::vector<int> verts(static_cast<std::size_t>(pieces), 0);
    for (std::size_t x = 0; x < n; ++x) ++verts[static_cast<std::size_t>(piece[x])];
    for (std::size_t x = 0; x < n; ++x) {
      for (int k = 0; k < 4; ++k) {
        if (used[x][static_cast<std::size_t>(k)]) continue;
        ++faces[static_cast<std::size_t>(piece[x])];
        int cx = int(x), ck = k;
        while (!used[static_cast<std::size_t>(cx)][static_cast<std::size_t>(ck)]) {
          used[static_cast<std::size_t>(cx)][static_cast<std::size_t>(ck)] = true;
          auto [y, m] = other(cx, ck);
          cx = y;
          ck = (m + 1) % 4;
        }
      }
    }
    for (int p = 0; p < pieces; ++p)
      if (faces[static_cast<std::size_t>(p)] != verts[static_cast<std::size_t>(p)] + 2) return false;
    return true;
  }

 private:
  friend class Wiring;

  // Cyclic successor of an edge within its component's contiguous range.
  std::optional<int> next_edge(int e) const {
    auto it = edge_comp_.find(e);
    if (it == edge_comp_.end()) return std::nullopt;
    int c = it->second;
    auto nx = edge_comp_.find(e + 1);
    if (nx != edge_comp_.end() && nx->second == c) return e + 1;
    int lo = e;
    while (true) {
      auto pv = edge_comp_.find(lo - 1);
      if (pv == edge_comp_.end() || pv->second != c) break;
      --lo;
    }
    return lo;
  }

  // Orientation solve: under slots are fixed by the convention, over slots by
  // consecutive numbering, with two-edge components settled by requiring one
  // head and one tail per edge.
  std::vector<int> derive_signs(std::vector<std::string>& issues) const {
    const std::size_t n = xs_.size();
    std::vector<int> signs(n, 0);
    std::map<int, int> count;
    for (const auto& x : xs_)
      for (int e : x.edges) ++count[e];
    for (auto [e, k] : count) {
      if (k != 2) issues.push_back("edge " + std::to_string(e) + " appears " + std::to_string(k) +
                                   " time(s), expected 2");
      if (!edge_comp_.count(e)) issues.push_back("edge " + std::to_string(e) + " has no component");
    }
    for (auto [e, c] : edge_comp_) {
      if (!count.count(e)) issues.push_back("edge " + std::to_string(e) + " is not used by any crossing");
      if (c < 0 || c >= ncomp_) issues.push_back("edge " + std::to_string(e) + " has component out of range");
    }
    // Contiguity of each component's labels.
    std::map<int, std::pair<int, int>> range;
    std::map<int, int> size;
    for (auto [e, c] : edge_comp_) {
      auto it = range.find(c);
      if (it == range.end()) range[c] = {e, e};
      else {
        it->second.first = std::min(it->second.first, e);
        it->second.second = std::max(it->second.second, e);
      }
      ++size[c];
    }
    for (auto [c, r] : range)
      if (r.second - r.first + 1 != size[c])
        issues.push_back("component " + std::to_string(c) + " edge labels are not consecutive");
    if (!issues.empty()) return signs;

    std::map<int, int> heads, tails;
    std::vector<int> pending;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = xs_[i].edges;
      ++heads[e[0]];
      ++tails[e[2]];
      if (next_edge(e[0]) != e[2])
        issues.push_back("crossing " + std::to_string(i) + ": under-strand edges " +
                         std::to_string(e[0]) + "," + std::to_string(e[2]) + " are not consecutive");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = xs_[i].edges;
      bool fwd = next_edge(e[3]) == e[1];  // over strand runs slot 3 -> slot 1
      bool bwd = next_edge(e[1]) == e[3];
      if (fwd && !bwd) signs[i] = 1;
      else if (bwd && !fwd) signs[i] = -1;
      else if (!fwd && !bwd) {
        issues.push_back("crossing " + std::to_string(i) + ": over-strand edges " +
                         std::to_string(e[1]) + "," + std::to_string(e[3]) + " are not consecutive");
        continue;
      } else {
        pending.push_back(static_cast<int>(i));
        continue;
      }
      if (signs[i] == 1) { ++heads[e[3]]; ++tails[e[1]]; }
      else { ++heads[e[1]]; ++tails[e[3]]; }
    }
    while (!pending.empty()) {
      bool progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        const auto& e = xs_[static_cast<std::size_t>(*it)].edges;
        int s = 0;
        if (heads[e[1]] > 0 || tails[e[3]] > 0) s = 1;
        else if (heads[e[3]] > 0 || tails[e[1]] > 0) s = -1;
        if (s == 0) { ++it; continue; }
        signs[static_cast<std::size_t>(*it)] = s;
        if (s == 1) { ++heads[e[3]]; ++tails[e[1]]; }
        else { ++heads[e[1]]; ++tails[e[3]]; }
        it = pending.erase(it);
        progress = true;
      }
      if (!progress) {
        // A two-edge component that is over at both of its crossings: the
        // numbering cannot orient it, so a stored sign decides, else +1.
        const auto& x = xs_[static_cast<std::size_t>(pending.front())];
        const auto& e = x.edges;
        const int s = x.sign != 0 ? x.sign : 1;
        signs[static_cast<std::size_t>(pending.front())] = s;
        if (s == 1) { ++heads[e[3]]; ++tails[e[1]]; }
        else { ++heads[e[1]]; ++tails[e[3]]; }
        pending.erase(pending.begin());
      }
    }
    for (auto [e, k] : count) {
      if (heads[e] != 1 || tails[e] != 1)
        issues.push_back("edge " + std::to_string(e) + " is not consistently oriented");
    }
    return signs;
  }

  std::string name_;
  int ncomp_ = 0;
  std::vector<Crossing> xs_;
  std::map<int, int> edge_comp_;
  std::map<int, int> loops_;
  std::vector<Bundle> bundles_;
  std::map<int, EdgeTag> tags_;
};

// Working form for surgeries: crossings hold edge indices per slot, edges know
// both endpoints.  Slot 0 is always the under-strand head; the over strand
// enters at slot 3 exactly when the crossing is positive.
class Wiring {
 public:
  struct End {
    int x = -1;
    int slot = -1;
  };
  struct Edge {
    End tail;
    End head;
    int comp = 0;
    EdgeTag tag;
  };
  struct X {
    std::array<int, 4> e{};
    bool positive = true;
  };

  std::vector<X> xs;
  std::vector<Edge> es;
  int ncomp = 0;
  std::vector<int> loops;  // free loops per component
  // Bundle entries are edge indices (>= 0) or -(comp + 1) for a free loop.
  std::vector<std::vector<int>> bundles;
  std::string name;

  explicit Wiring(const LinkDiagram& d) {
    d.require_valid();
    name = d.name_;
    ncomp = d.ncomp_;
    loops.assign(static_cast<std::size_t>(ncomp), 0);
    for (auto [c, k] : d.loops_) loops[static_cast<std::size_t>(c)] = k;
    std::map<int, int> index;
    for (auto [e, c] : d.edge_comp_) {
      index[e] = static_cast<int>(es.size());
      es.push_back({{}, {}, c, d.tag_of(e)});
    }
    for (std::size_t i = 0; i < d.xs_.size(); ++i) {
      const auto& c = d.xs_[i];
      X x;
      x.positive = c.sign > 0;
      for (int k = 0; k < 4; ++k) x.e[static_cast<std::size_t>(k)] = index.at(c.edges[static_cast<std::size_t>(k)]);
      xs.push_back(x);
      const int xi = static_cast<int>(i);
      es[static_cast<std::size_t>(x.e[0])].head = {xi, 0};
      es[static_cast<std::size_t>(x.e[2])].tail = {xi, 2};
      int in = x.positive ? 3 : 1;
      es[static_cast<std::size_t>(x.e[static_cast<std::size_t>(in)])].head = {xi, in};
      es[static_cast<std::size_t>(x.e[static_cast<std::size_t>(4 - in)])].tail = {xi, 4 - in};
    }
    for (const auto& b : d.bundles_) {
      std::vector<int> entry;
      for (int v : b) entry.push_back(v > 0 ? index.at(v) : v);
      bundles.push_back(std::move(entry));
    }
  }

  Wiring() = default;

  Edge& edge(int i) { return es[static_cast<std::size_t>(i)]; }
  const Edge& edge(int i) const { return es[static_cast<std::size_t>(i)]; }
  int& slot_edge(End end) { return xs[static_cast<std::size_t>(end.x)].e[static_cast<std::size_t>(end.slot)]; }

  int add_crossing(bool positive) {
    xs.push_back({{-1, -1, -1, -1}, positive});
    return static_cast<int>(xs.size()) - 1;
  }
  int add_edge(End tail, End head, int comp, EdgeTag tag) {
    es.push_back({tail, head, comp, std::move(tag)});
    int id = static_cast<int>(es.size()) - 1;
    slot_edge(tail) = id;
    slot_edge(head) = id;
    return id;
  }

  int under_comp(int x) const { return edge(xs[static_cast<std::size_t>(x)].e[0]).comp; }
  int over_comp(int x) const { return edge(xs[static_cast<std::size_t>(x)].e[1]).comp; }

  // Numbers edges 1.. in component order, each component starting at its
  // smallest tag and following its orientation.
  LinkDiagram finalize() const {
    LinkDiagram d;
    d.name_ = name;
    d.ncomp_ = ncomp;
    std::vector<std::vector<int>> by_comp(static_cast<std::size_t>(ncomp));
    for (std::size_t i = 0; i < es.size(); ++i) by_comp[static_cast<std::size_t>(es[i].comp)].push_back(static_cast<int>(i));
    std::vector<int> label(es.size(), 0);
    int next = 1;
    for (int c = 0; c < ncomp; ++c) {
      auto& list = by_comp[static_cast<std::size_t>(c)];
      if (list.empty()) {
        if (loops[static_cast<std::size_t>(c)] > 0) d.loops_[c] = loops[static_cast<std::size_t>(c)];
        continue;
      }
      int start = *std::min_element(list.begin(), list.end(), [&](int a, int b) {
        return edge(a).tag < edge(b).tag;
      });
      int cur = start;
      std::size_t steps = 0;
      do {
        if (label[static_cast<std::size_t>(cur)] != 0)
          throw InvalidDiagram("finalize: component " + std::to_string(c) + " revisits an edge");
        label[static_cast<std::size_t>(cur)] = next;
        d.edge_comp_[next] = c;
        d.tags_[next] = edge(cur).tag;
        ++next;
        End h = edge(cur).head;
        cur = xs[static_cast<std::size_t>(h.x)].e[static_cast<std::size_t>((h.slot + 2) % 4)];
        ++steps;
      } while (cur != start && steps <= es.size());
      if (steps != list.size())
        throw InvalidDiagram("finalize: component " + std::to_string(c) + " is not a single cycle");
    }
    for (const auto& x : xs) {
      Crossing c;
      for (int k = 0; k < 4; ++k) c.edges[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(x.e[static_cast<std::size_t>(k)])];
      c.sign = x.positive ? 1 : -1;
      d.xs_.push_back(c);
    }
    for (const auto& b : bundles) {
      Bundle out;
      for (int v : b) out.push_back(v >= 0 ? label[static_cast<std::size_t>(v)] : v);
      d.bundles_.push_back(std::move(out));
    }
    return d;
  }

  // Recomputes edge directions so each component is a consistently oriented
  // cycle (used after unoriented smoothings), keeping the direction of the
  // smallest-tag edge of each cycle, then renormalizes crossing slots and
  // assigns components by cycle, ordered by smallest tag.
  void reorient_and_recompute_components() {
    const std::size_t m = es.size();
    // Undirected view: each edge has two ends; at a crossing, slot k continues
    // to slot k+2.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return edge(a).tag < edge(b).tag; });
    std::vector<int> cycle(m, -1);
    std::vector<Edge> fixed = es;
    int ncycles = 0;
    for (int start : order) {
      if (cycle[static_cast<std::size_t>(start)] >= 0) continue;
      int cur = start;
      End from = edge(start).tail;
      End to = edge(start).head;
      while (true) {
        cycle[static_cast<std::size_t>(cur)] = ncycles;
        fixed[static_cast<std::size_t>(cur)].tail = from;
        fixed[static_cast<std::size_t>(cur)].head = to;
        End out{to.x, (to.slot + 2) % 4};
        int nxt = slot_edge(out);
        if (nxt == start) break;
        const Edge& ne = edge(nxt);
        // The next edge leaves from `out`; its other end is wherever it is not.
        End a = ne.tail, b = ne.head;
        bool a_is_out = a.x == out.x && a.slot == out.slot;
        from = out;
        to = a_is_out ? b : a;
        if (a.x == b.x && a.slot == b.slot) to = a;
        cur = nxt;
      }
      ++ncycles;
    }
    es = fixed;
    std::vector<int> comp_order(static_cast<std::size_t>(ncycles));
    for (std::size_t i = 0; i < m; ++i) es[i].comp = cycle[i];
    // Crossingless components carried as loops stay after the cycles.
    int extra = 0;
    for (int l : loops) extra += l;
    ncomp = ncycles + extra;
    loops.assign(static_cast<std::size_t>(ncomp), 0);
    for (int i = 0; i < extra; ++i) loops[static_cast<std::size_t>(ncycles + i)] = 1;
    normalize_slots();
    bundles.clear();
  }

  // Rotates crossings whose slot 0 is not an under-strand head and recomputes
  // the over direction from edge heads.
  void normalize_slots() {
    for (std::size_t x = 0; x < xs.size(); ++x) {
      int e0 = xs[x].e[0];
      bool head_at_0 = edge(e0).head.x == int(x) && edge(e0).head.slot == 0;
      if (!head_at_0) {
        std::array<int, 4> rot;
        for (int k = 0; k < 4; ++k) rot[static_cast<std::size_t>(k)] = xs[x].e[static_cast<std::size_t>((k + 2) % 4)];
        xs[x].e = rot;
        for (int k = 0; k < 4; ++k) {
          Edge& ed = edge(rot[static_cast<std::size_t>(k)]);
          // Each end at x moves from slot s to slot s-2.
          (void)ed;
        }
        for (auto& ed : es) {
          if (ed.tail.x == int(x)) ed.tail.slot = (ed.tail.slot + 2) % 4;
          if (ed.head.x == int(x)) ed.head.slot = (ed.head.slot + 2) % 4;
        }
      }
      int e3 = xs[x].e[3];
      xs[x].positive = edge(e3).head.x == int(x) && edge(e3).head.slot == 3;
    }
  }
};

// ---------------------------------------------------------------------------
// Surgeries

namespace detail {

inline EdgeTag extend(EdgeTag t, int piece) {
  t.push_back(piece);
  return t;
}

}  // namespace detail

// Replaces component `comp` by n blackboard parallels.  Copy p sits p units to
// the left of the original strand; copies take indices comp..comp+n-1.
inline LinkDiagram cable(const LinkDiagram& d, int comp, int n) {
  if (n < 1) throw std::invalid_argument("cable: n must be at least 1");
  if (comp < 0 || comp >= d.num_components())
    throw std::invalid_argument("cable: no component " + std::to_string(comp));
  Wiring w(d);
  if (n == 1) return w.finalize();
  auto new_comp = [&](int c, int copy) { return c < comp ? c : (c == comp ? comp + copy : c + n - 1); };
  auto copies_of = [&](int c) { return c == comp ? n : 1; };

  Wiring out;
  out.name = w.name;
  out.ncomp = w.ncomp + n - 1;
  out.loops.assign(static_cast<std::size_t>(out.ncomp), 0);
  for (int c = 0; c < w.ncomp; ++c)
    for (int p = 0; p < copies_of(c); ++p)
      out.loops[static_cast<std::size_t>(new_comp(c, p))] = w.loops[static_cast<std::size_t>(c)];

  struct Grid {
    int base = 0;
    int nu = 1;
    int no = 1;
    bool positive = true;
    int at(int p, int q) const { return base + p * no + q; }
  };
  std::vector<Grid> grid(w.xs.size());
  for (std::size_t x = 0; x < w.xs.size(); ++x) {
    Grid g;
    g.base = static_cast<int>(out.xs.size());
    g.nu = copies_of(w.under_comp(static_cast<int>(x)));
    g.no = copies_of(w.over_comp(static_cast<int>(x)));
    g.positive = w.xs[x].positive;
    for (int i = 0; i < g.nu * g.no; ++i) out.add_crossing(g.positive);
    grid[x] = g;
  }
  // Under copy p runs north at x = -p; over copy q runs along y = +q (positive,
  // eastward) or y = -q (negative, westward).  Slot 0 is south, then
  // counterclockwise east, north, west.
  auto boundary = [&](Wiring::End end, int copy) -> Wiring::End {
    const Grid& g = grid[static_cast<std::size_t>(end.x)];
    switch (end.slot) {
      case 0: return {g.at(copy, g.positive ? 0 : g.no - 1), 0};
      case 2: return {g.at(copy, g.positive ? g.no - 1 : 0), 2};
      case 1: return {g.at(0, copy), 1};
      default: return {g.at(g.nu - 1, copy), 3};
    }
  };
  std::vector<std::vector<int>> copies(w.es.size());
  for (std::size_t i = 0; i < w.es.size(); ++i) {
    const auto& e = w.es[i];
    for (int p = 0; p < copies_of(e.comp); ++p) {
      copies[i].push_back(out.add_edge(boundary(e.tail, p), boundary(e.head, p), new_comp(e.comp, p), e.tag));
    }
  }
  for (std::size_t x = 0; x < w.xs.size(); ++x) {
    const Grid& g = grid[x];
    const auto& wx = w.xs[x];
    const EdgeTag& under_tag = w.edge(wx.e[0]).tag;
    const EdgeTag& over_tag = w.edge(wx.e[g.positive ? 3 : 1]).tag;
    const int uc = w.under_comp(static_cast<int>(x));
    const int oc = w.over_comp(static_cast<int>(x));
    for (int p = 0; p < g.nu; ++p) {
      // South to north along the vertical line.
      for (int i = 0; i + 1 < g.no; ++i) {
        int lower = g.positive ? g.at(p, i) : g.at(p, g.no - 1 - i);
        int upper = g.positive ? g.at(p, i + 1) : g.at(p, g.no - 2 - i);
        out.add_edge({lower, 2}, {upper, 0}, new_comp(uc, p), detail::extend(under_tag, i + 1));
      }
    }
    for (int q = 0; q < g.no; ++q) {
      for (int i = 0; i + 1 < g.nu; ++i) {
        if (g.positive) {
          // West (p large) to east (p small).
          int west = g.at(g.nu - 1 - i, q);
          int east = g.at(g.nu - 2 - i, q);
          out.add_edge({west, 1}, {east, 3}, new_comp(oc, q), detail::extend(over_tag, i + 1));
        } else {
          int east = g.at(i, q);
          int west = g.at(i + 1, q);
          out.add_edge({east, 3}, {west, 1}, new_comp(oc, q), detail::extend(over_tag, i + 1));
        }
      }
    }
  }
  for (const auto& b : w.bundles) {
    std::vector<int> nb;
    for (int v : b) {
      if (v >= 0) {
        for (int id : copies[static_cast<std::size_t>(v)]) nb.push_back(id);
      } else {
        int c = -v - 1;
        for (int p = 0; p < copies_of(c); ++p) nb.push_back(-(new_comp(c, p) + 1));
      }
    }
    out.bundles.push_back(std::move(nb));
  }
  if (w.loops[static_cast<std::size_t>(comp)] > 0) {
    std::vector<int> nb;
    for (int p = 0; p < n; ++p) nb.push_back(-(comp + p + 1));
    out.bundles.push_back(std::move(nb));
  }
  for (std::size_t i = 0; i < w.es.size(); ++i)
    if (w.es[i].comp == comp) out.bundles.push_back(copies[i]);
  return out.finalize();
}

namespace detail {

// Turns a crossingless component into a single edge whose two ends are the
// given slots, for use as an insertion site.
inline int open_free_loop(Wiring& w, int comp, Wiring::End tail, Wiring::End head) {
  if (w.loops[static_cast<std::size_t>(comp)] != 1)
    throw std::invalid_argument("bundle entry is not a free loop");
  w.loops[static_cast<std::size_t>(comp)] = 0;
  return w.add_edge(tail, head, comp, EdgeTag{0});
}

}  // namespace detail

// Adds one meridian around a recorded bundle (or around a single edge or free
// loop).  The meridian runs counterclockwise about the bundle: over every
// strand on the first pass, under every strand on the return, so each new
// crossing is positive.  The meridian becomes the last component, and the
// bundle record moves to the pieces past the meridian.
inline LinkDiagram insert_meridian(const LinkDiagram& d, const Bundle& site) {
  if (site.empty()) throw std::invalid_argument("insert_meridian: empty site");
  bool recorded = std::find(d.bundles().begin(), d.bundles().end(), site) != d.bundles().end();
  if (!recorded && site.size() != 1)
    throw std::invalid_argument("insert_meridian: edges are not a recorded bundle");
  Wiring w(d);
  // Map the site to wiring edge indices / free-loop components.
  std::map<int, int> index;
  {
    int i = 0;
    for (auto [e, c] : d.component_of_edge()) index[e] = i++;
  }
  const int width = static_cast<int>(site.size());
  const int mcomp = w.ncomp;
  w.ncomp += 1;
  w.loops.push_back(0);
  std::vector<int> bottom(static_cast<std::size_t>(width)), top(static_cast<std::size_t>(width));
  for (int p = 0; p < width; ++p) bottom[static_cast<std::size_t>(p)] = w.add_crossing(true);
  for (int p = 0; p < width; ++p) top[static_cast<std::size_t>(p)] = w.add_crossing(true);
  std::vector<int> after_piece(static_cast<std::size_t>(width));
  for (int p = 0; p < width; ++p) {
    const int b = bottom[static_cast<std::size_t>(p)];
    const int t = top[static_cast<std::size_t>(p)];
    const int entry = site[static_cast<std::size_t>(p)];
    if (entry > 0) {
      auto it = index.find(entry);
      if (it == index.end()) throw std::invalid_argument("insert_meridian: unknown edge " + std::to_string(entry));
      const int e = it->second;
      Wiring::Edge old = w.edge(e);
      // before: old tail -> bottom slot 0
      w.edge(e).head = {b, 0};
      w.slot_edge({b, 0}) = e;
      w.add_edge({b, 2}, {t, 3}, old.comp, detail::extend(old.tag, 1));
      after_piece[static_cast<std::size_t>(p)] =
          w.add_edge({t, 1}, old.head, old.comp, detail::extend(old.tag, 2));
    } else {
      const int c = -entry - 1;
      if (c < 0 || c >= mcomp) throw std::invalid_argument("insert_meridian: unknown component");
      int closing = detail::open_free_loop(w, c, {t, 1}, {b, 0});
      w.add_edge({b, 2}, {t, 3}, c, EdgeTag{0, 1});
      after_piece[static_cast<std::size_t>(p)] = closing;
    }
  }
  // Meridian: bottom pass eastward from the leftmost strand (p = width-1) to
  // the rightmost (p = 0), up the right side, top pass westward back.
  int serial = 0;
  for (int p = width - 1; p > 0; --p)
    w.add_edge({bottom[static_cast<std::size_t>(p)], 1}, {bottom[static_cast<std::size_t>(p - 1)], 3}, mcomp, EdgeTag{serial++});
  w.add_edge({bottom[0], 1}, {top[0], 0}, mcomp, EdgeTag{serial++});
  for (int p = 0; p + 1 < width; ++p)
    w.add_edge({top[static_cast<std::size_t>(p)], 2}, {top[static_cast<std::size_t>(p + 1)], 0}, mcomp, EdgeTag{serial++});
  w.add_edge({top[static_cast<std::size_t>(width - 1)], 2}, {bottom[static_cast<std::size_t>(width - 1)], 3}, mcomp, EdgeTag{serial++});

  // The bundle now refers to the pieces beyond the meridian.
  for (auto& b : w.bundles) {
    std::vector<int> mapped;
    bool matches = true;
    if (b.size() != site.size()) matches = false;
    for (std::size_t i = 0; matches && i < b.size(); ++i) {
      int entry = site[i];
      int want = entry > 0 ? index.at(entry) : entry;
      if (b[i] != want) matches = false;
    }
    if (matches) b = after_piece;
  }
  if (!recorded) w.bundles.push_back(after_piece);
  return w.finalize();
}

// Convenience: a meridian around one crossingless component.
inline LinkDiagram insert_meridian_around_loop(const LinkDiagram& d, int comp) {
  return insert_meridian(d, Bundle{-(comp + 1)});
}

namespace detail {

// Removes the given crossings, splicing each surviving strand straight
// through.  Strands with no crossings left become free loops.
inline Wiring remove_crossings(const Wiring& w, const std::vector<bool>& removed,
                               const std::vector<bool>& drop_comp) {
  Wiring out;
  out.name = w.name;
  std::vector<int> comp_map(static_cast<std::size_t>(w.ncomp), -1);
  for (int c = 0; c < w.ncomp; ++c)
    if (!drop_comp[static_cast<std::size_t>(c)]) comp_map[static_cast<std::size_t>(c)] = out.ncomp++;
  out.loops.assign(static_cast<std::size_t>(out.ncomp), 0);
  for (int c = 0; c < w.ncomp; ++c)
    if (comp_map[static_cast<std::size_t>(c)] >= 0)
      out.loops[static_cast<std::size_t>(comp_map[static_cast<std::size_t>(c)])] = w.loops[static_cast<std::size_t>(c)];
  std::vector<int> xmap(w.xs.size(), -1);
  for (std::size_t x = 0; x < w.xs.size(); ++x) {
    if (removed[x]) continue;
    xmap[x] = out.add_crossing(w.xs[x].positive);
  }
  std::vector<int> emap(w.es.size(), -1);
  std::vector<bool> seen(w.es.size(), false);
  for (std::size_t i = 0; i < w.es.size(); ++i) {
    const auto& e = w.es[i];
    if (drop_comp[static_cast<std::size_t>(e.comp)] || removed[static_cast<std::size_t>(e.tail.x)]) continue;
    std::vector<int> chain{static_cast<int>(i)};
    int cur = static_cast<int>(i);
    while (removed[static_cast<std::size_t>(w.edge(cur).head.x)]) {
      Wiring::End h = w.edge(cur).head;
      cur = w.xs[static_cast<std::size_t>(h.x)].e[static_cast<std::size_t>((h.slot + 2) % 4)];
      chain.push_back(cur);
    }
    EdgeTag tag = w.edge(chain.front()).tag;
    for (int c : chain) tag = std::min(tag, w.edge(c).tag);
    Wiring::End t{xmap[static_cast<std::size_t>(e.tail.x)], e.tail.slot};
    Wiring::End h{xmap[static_cast<std::size_t>(w.edge(cur).head.x)], w.edge(cur).head.slot};
    int id = out.add_edge(t, h, comp_map[static_cast<std::size_t>(e.comp)], tag);
    for (int c : chain) {
      emap[static_cast<std::size_t>(c)] = id;
      seen[static_cast<std::size_t>(c)] = true;
    }
  }
  // Surviving strands that lost every crossing.
  for (std::size_t i = 0; i < w.es.size(); ++i) {
    const auto& e = w.es[i];
    if (seen[i] || drop_comp[static_cast<std::size_t>(e.comp)]) continue;
    int nc = comp_map[static_cast<std::size_t>(e.comp)];
    // Mark the whole cycle.
    int cur = static_cast<int>(i);
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      emap[static_cast<std::size_t>(cur)] = -(nc + 1) - 1000000;
      Wiring::End h = w.edge(cur).head;
      cur = w.xs[static_cast<std::size_t>(h.x)].e[static_cast<std::size_t>((h.slot + 2) % 4)];
    } while (cur != static_cast<int>(i));
    out.loops[static_cast<std::size_t>(nc)] += 1;
  }
  for (const auto& b : w.bundles) {
    std::vector<int> nb;
    bool keep = true;
    for (int v : b) {
      if (v >= 0) {
        int m = emap[static_cast<std::size_t>(v)];
        if (m == -1) { keep = false; break; }
        if (m < -1) m = m + 1000000;  // became a free loop: -(nc+1)
        if (std::find(nb.begin(), nb.end(), m) == nb.end()) nb.push_back(m);
      } else {
        int c = -v - 1;
        if (comp_map[static_cast<std::size_t>(c)] < 0) { keep = false; break; }
        nb.push_back(-(comp_map[static_cast<std::size_t>(c)] + 1));
      }
    }
    if (keep && !nb.empty()) out.bundles.push_back(std::move(nb));
  }
  return out;
}

}  // namespace detail

// Removes a component together with all of its crossings.
inline LinkDiagram delete_component(const LinkDiagram& d, int comp) {
  if (comp < 0 || comp >= d.num_components())
    throw std::invalid_argument("delete_component: no component " + std::to_string(comp));
  Wiring w(d);
  std::vector<bool> removed(w.xs.size(), false);
  for (std::size_t x = 0; x < w.xs.size(); ++x)
    removed[x] = w.under_comp(int(x)) == comp || w.over_comp(int(x)) == comp;
  std::vector<bool> drop(static_cast<std::size_t>(w.ncomp), false);
  drop[static_cast<std::size_t>(comp)] = true;
  return detail::remove_crossings(w, removed, drop).finalize();
}

// Keeps only the listed components (in their original order).
inline LinkDiagram restrict_components(const LinkDiagram& d, const std::vector<int>& keep) {
  Wiring w(d);
  std::vector<bool> drop(static_cast<std::size_t>(w.ncomp), true);
  for (int c : keep) {
    if (c < 0 || c >= w.ncomp) throw std::invalid_argument("restrict_components: bad component");
    drop[static_cast<std::size_t>(c)] = false;
  }
  std::vector<bool> removed(w.xs.size(), false);
  for (std::size_t x = 0; x < w.xs.size(); ++x)
    removed[x] = drop[static_cast<std::size_t>(w.under_comp(int(x)))] || drop[static_cast<std::size_t>(w.over_comp(int(x)))];
  return detail::remove_crossings(w, removed, drop).finalize();
}

// Reverses the orientation of the chosen components.
inline LinkDiagram reverse(const LinkDiagram& d, const std::set<int>& comps) {
  for (int c : comps)
    if (c < 0 || c >= d.num_components())
      throw std::invalid_argument("reverse: no component " + std::to_string(c));
  Wiring w(d);
  for (auto& e : w.es)
    if (comps.count(e.comp)) std::swap(e.tail, e.head);
  w.normalize_slots();
  // Bundles stay parallel only if reversed as a whole (their left/right order
  // then flips).
  std::vector<std::vector<int>> kept;
  for (auto b : w.bundles) {
    std::size_t hit = 0;
    for (int v : b) {
      int c = v >= 0 ? w.edge(v).comp : -v - 1;
      if (comps.count(c)) ++hit;
    }
    if (hit == 0) kept.push_back(b);
    else if (hit == b.size()) {
      std::reverse(b.begin(), b.end());
      kept.push_back(b);
    }
  }
  w.bundles = kept;
  return w.finalize();
}

inline LinkDiagram reverse_all(const LinkDiagram& d) {
  std::set<int> all;
  for (int c = 0; c < d.num_components(); ++c) all.insert(c);
  return reverse(d, all);
}

// Places b beside a; b's components follow a's.
inline LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  Wiring wa(a), wb(b);
  const int xo = static_cast<int>(wa.xs.size());
  const int eo = static_cast<int>(wa.es.size());
  const int co = wa.ncomp;
  for (auto x : wb.xs) {
    for (auto& e : x.e) e += eo;
    wa.xs.push_back(x);
  }
  for (auto e : wb.es) {
    e.tail.x += xo;
    e.head.x += xo;
    e.comp += co;
    wa.es.push_back(e);
  }
  for (int l : wb.loops) wa.loops.push_back(l);
  for (auto bnd : wb.bundles) {
    for (auto& v : bnd) v = v >= 0 ? v + eo : -(-v - 1 + co + 1);
    wa.bundles.push_back(bnd);
  }
  wa.ncomp += wb.ncomp;
  if (!a.name().empty() || !b.name().empty()) wa.name = a.name() + "+" + b.name();
  return wa.finalize();
}

// Switches over and under at one crossing; edge labels are unchanged.
inline LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t index) {
  if (index >= d.num_crossings()) throw std::invalid_argument("switch_crossing: no such crossing");
  Wiring w(d);
  auto& x = w.xs[index];
  // The over strand's incoming slot becomes the new slot 0.
  int in = x.positive ? 3 : 1;
  std::array<int, 4> rot;
  for (int k = 0; k < 4; ++k) rot[static_cast<std::size_t>(k)] = x.e[static_cast<std::size_t>((k + in) % 4)];
  x.e = rot;
  for (auto& e : w.es) {
    if (e.tail.x == int(index)) e.tail.slot = (e.tail.slot - in + 4) % 4;
    if (e.head.x == int(index)) e.head.slot = (e.head.slot - in + 4) % 4;
  }
  w.normalize_slots();
  return w.finalize();
}

enum class Smoothing {
  oriented,  // Homfly smoothing, respects orientation
  zero,      // joins slots (0,1) and (2,3)
  infinity,  // joins slots (0,3) and (1,2)
};

// Resolves one crossing.  Component indices of the result follow the smallest
// edge tag of each new component.
inline LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t index, Smoothing kind) {
  if (index >= d.num_crossings()) throw std::invalid_argument("smooth_crossing: no such crossing");
  Wiring w(d);
  const auto& x = w.xs[index];
  if (kind == Smoothing::oriented) kind = x.positive ? Smoothing::zero : Smoothing::infinity;
  std::array<int, 4> partner = kind == Smoothing::zero ? std::array<int, 4>{1, 0, 3, 2}
                                                       : std::array<int, 4>{3, 2, 1, 0};
  // Walk the undirected strands through the removed crossing.
  const int xi = static_cast<int>(index);
  Wiring out;
  out.name = w.name;
  out.ncomp = 0;
  std::vector<int> xmap(w.xs.size(), -1);
  for (std::size_t i = 0; i < w.xs.size(); ++i)
    if (int(i) != xi) xmap[i] = out.add_crossing(w.xs[i].positive);
  auto other_end = [&](int e, Wiring::End end) {
    const auto& ed = w.edge(e);
    if (ed.tail.x == end.x && ed.tail.slot == end.slot) return ed.head;
    return ed.tail;
  };
  std::vector<bool> used(w.es.size(), false);
  int free_loops = 0;
  for (std::size_t i = 0; i < w.es.size(); ++i) {
    if (used[i]) continue;
    const auto& e = w.es[i];
    // Start from an end that is not at the removed crossing, if any.
    Wiring::End a = e.tail, b = e.head;
    const bool backward = a.x == xi && b.x != xi;
    if (backward) std::swap(a, b);
    if (a.x == xi) continue;  // both ends at x; handled when reached or as a loop below
    used[i] = true;
    EdgeTag tag = e.tag;
    Wiring::End cur = b;
    int ce = static_cast<int>(i);
    while (cur.x == xi) {
      Wiring::End out_end{xi, partner[static_cast<std::size_t>(cur.slot)]};
      ce = w.xs[index].e[static_cast<std::size_t>(out_end.slot)];
      used[static_cast<std::size_t>(ce)] = true;
      tag = std::min(tag, w.edge(ce).tag);
      cur = other_end(ce, out_end);
    }
    Wiring::End na{xmap[static_cast<std::size_t>(a.x)], a.slot};
    Wiring::End nb{xmap[static_cast<std::size_t>(cur.x)], cur.slot};
    if (backward) std::swap(na, nb);
    out.es.push_back({na, nb, 0, tag});
    int id = static_cast<int>(out.es.size()) - 1;
    out.slot_edge(na) = id;
    out.slot_edge(nb) = id;
  }
  // Edges with both ends at x that were never reached form closed loops.
  for (std::size_t i = 0; i < w.es.size(); ++i) {
    if (used[i]) continue;
    Wiring::End cur = w.es[i].head;
    int ce = static_cast<int>(i);
    do {
      used[static_cast<std::size_t>(ce)] = true;
      Wiring::End out_end{xi, partner[static_cast<std::size_t>(cur.slot)]};
      ce = w.xs[index].e[static_cast<std::size_t>(out_end.slot)];
      cur = other_end(ce, out_end);
    } while (!used[static_cast<std::size_t>(ce)]);
    ++free_loops;
  }
  // Untouched free loops survive.
  for (int l : w.loops) free_loops += l;
  out.loops.assign(static_cast<std::size_t>(free_loops), 1);
  out.ncomp = free_loops;
  out.reorient_and_recompute_components();
  return out.finalize();
}

// Adds a kink of the given sign on an edge (or on a free loop when edge < 0
// names component -edge-1).
inline LinkDiagram add_curl(const LinkDiagram& d, int edge, int sign) {
  Wiring w(d);
  std::map<int, int> index;
  {
    int i = 0;
    for (auto [e, c] : d.component_of_edge()) index[e] = i++;
  }
  int k = w.add_crossing(sign > 0);
  if (edge > 0) {
    auto it = index.find(edge);
    if (it == index.end()) throw std::invalid_argument("add_curl: unknown edge");
    int e = it->second;
    Wiring::Edge old = w.edge(e);
    w.edge(e).head = {k, 0};
    w.slot_edge({k, 0}) = e;
    if (sign > 0) {
      w.add_edge({k, 2}, {k, 3}, old.comp, detail::extend(old.tag, 1));
      w.add_edge({k, 1}, old.head, old.comp, detail::extend(old.tag, 2));
    } else {
      w.add_edge({k, 2}, {k, 1}, old.comp, detail::extend(old.tag, 1));
      w.add_edge({k, 3}, old.head, old.comp, detail::extend(old.tag, 2));
    }
  } else {
    int c = -edge - 1;
    if (c < 0 || c >= w.ncomp || w.loops[static_cast<std::size_t>(c)] != 1)
      throw std::invalid_argument("add_curl: not a free loop");
    w.loops[static_cast<std::size_t>(c)] = 0;
    if (sign > 0) {
      w.add_edge({k, 1}, {k, 0}, c, EdgeTag{0});
      w.add_edge({k, 2}, {k, 3}, c, EdgeTag{0, 1});
    } else {
      w.add_edge({k, 3}, {k, 0}, c, EdgeTag{0});
      w.add_edge({k, 2}, {k, 1}, c, EdgeTag{0, 1});
    }
  }
  return w.finalize();
}

// Deterministic encoding invariant under relabelings that keep component
// order and the cyclic edge order along each component.  Each component
// starts at the rotation whose local crossing signature is smallest; ties are
// broken by comparing full codes.
inline std::string canonical_code(const LinkDiagram& d) {
  d.require_valid();
  const int nc = d.num_components();
  std::vector<std::vector<int>> edges(static_cast<std::size_t>(nc));
  for (auto [e, c] : d.component_of_edge()) edges[static_cast<std::size_t>(c)].push_back(e);
  // Head crossing of each edge: the crossing where it is the under-in or the
  // over-in strand.
  std::map<int, std::pair<std::size_t, int>> head;
  for (std::size_t i = 0; i < d.num_crossings(); ++i) {
    const auto& x = d.crossings()[i];
    head[x.edges[0]] = {i, 0};
    head[x.edges[x.sign > 0 ? 3 : 1]] = {i, x.sign > 0 ? 3 : 1};
  }
  auto signature = [&](const std::vector<int>& list, std::size_t rot) {
    std::vector<int> sig;
    for (std::size_t j = 0; j < list.size(); ++j) {
      int e = list[(rot + j) % list.size()];
      auto [xi, slot] = head.at(e);
      const auto& x = d.crossings()[xi];
      int other = d.component_of(x.edges[slot == 0 ? 1 : 0]);
      sig.push_back(slot == 0 ? 0 : 1);
      sig.push_back(x.sign);
      sig.push_back(other);
    }
    return sig;
  };
  std::vector<std::vector<std::size_t>> choices(static_cast<std::size_t>(nc));
  for (int c = 0; c < nc; ++c) {
    const auto& list = edges[static_cast<std::size_t>(c)];
    if (list.empty()) {
      choices[static_cast<std::size_t>(c)] = {0};
      continue;
    }
    std::vector<int> best;
    for (std::size_t r = 0; r < list.size(); ++r) {
      auto sig = signature(list, r);
      if (best.empty() || sig < best) {
        best = sig;
        choices[static_cast<std::size_t>(c)] = {r};
      } else if (sig == best) {
        choices[static_cast<std::size_t>(c)].push_back(r);
      }
    }
  }
  auto encode = [&](const std::vector<std::size_t>& pick) {
    std::map<int, int> relabel;
    int next = 1;
    for (int c = 0; c < nc; ++c) {
      const auto& list = edges[static_cast<std::size_t>(c)];
      for (std::size_t j = 0; j < list.size(); ++j)
        relabel[list[(pick[static_cast<std::size_t>(c)] + j) % list.size()]] = next++;
    }
    std::vector<std::array<int, 5>> xs;
    for (const auto& x : d.crossings())
      xs.push_back({relabel[x.edges[0]], relabel[x.edges[1]], relabel[x.edges[2]], relabel[x.edges[3]], x.sign});
    std::sort(xs.begin(), xs.end());
    std::string s = "C" + std::to_string(nc) + ";";
    for (int c = 0; c < nc; ++c)
      s += std::to_string(edges[static_cast<std::size_t>(c)].size()) + (d.free_loops().count(c) ? "L" : "") + ",";
    s += ";";
    for (const auto& x : xs) {
      s += "X";
      for (int k = 0; k < 4; ++k) s += (k ? "," : "") + std::to_string(x[static_cast<std::size_t>(k)]);
      s += x[4] > 0 ? "+" : "-";
    }
    return s;
  };
  std::string best;
  bool have = false;
  std::vector<std::size_t> pick(static_cast<std::size_t>(nc), 0);
  std::function<void(int)> rec = [&](int c) {
    if (c == nc) {
      std::string s = encode(pick);
      if (!have || s < best) {
        best = s;
        have = true;
      }
      return;
    }
    for (std::size_t r : choices[static_cast<std::size_t>(c)]) {
      pick[static_cast<std::size_t>(c)] = r;
      rec(c + 1);
    }
  };
  rec(0);
  return best;
}

}  // namespace skeinlab
