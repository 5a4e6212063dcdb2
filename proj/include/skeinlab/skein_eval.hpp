#pragma once

// Framed Homfly and Kauffman (Dubrovnik) polynomials of link diagrams.
//
//   Homfly:   P(X+) - P(X-) = z P(X0),             curl +: v^-1, curl -: v
//   Kauffman: D(X) - D(X') = z (D(L0) - D(Linf)),  same curl factors
//
// with z = s - s^-1, both normalized to 1 on the empty diagram.
//
// The evaluator resolves toward descending diagrams: pick a component and a
// basepoint, switch the first crossing met from below, and recurse on the
// smoothing terms.  Once a component is over everything it is lifted off as a
// separate loop.  Curls and removable bigons are cleared before each step,
// split diagrams are evaluated piece by piece, and connected pieces are
// memoized on a canonical traversal code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/ring.hpp"

namespace skeinlab {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t crossings, int budget, const std::string& where = "")
      : std::runtime_error("crossing budget exceeded: " + std::to_string(crossings) +
                           " crossings (max " + std::to_string(budget) + ")" +
                           (where.empty() ? "" : " in " + where)),
        crossings_(crossings) {}
  std::size_t crossings() const { return crossings_; }

 private:
  std::size_t crossings_;
};

struct EvalConfig {
  int max_crossings = 24;
  bool memo_enabled = true;
  int parallelism = 1;
  // Evaluating in characteristic 2 yields the mod-2 reduction directly.
  Characteristic characteristic = Characteristic::zero;
};

enum class Flavor { homfly, kauffman };

inline std::string to_string(Flavor f) { return f == Flavor::homfly ? "homfly" : "kauffman"; }

namespace detail {

// Crossing-slot graph.  Slot h = 4c + k; adj[h] is the slot at the other end
// of the edge.  Slot 0 is the incoming under-strand, slot 2 outgoing; the
// over strand enters at slot 3 when sign > 0, at slot 1 otherwise.
struct SlotGraph {
  std::vector<int> adj;
  std::vector<int8_t> sign;
  int loops = 0;

  int size() const { return static_cast<int>(sign.size()); }
  static int through(int h) { return (h & ~3) | ((h + 2) & 3); }
  int over_in(int c) const { return sign[static_cast<std::size_t>(c)] > 0 ? 3 : 1; }
  bool is_in(int h) const { return (h & 3) == 0 || (h & 3) == over_in(h >> 2); }

  static SlotGraph from(const LinkDiagram& d) {
    SlotGraph g;
    const int n = static_cast<int>(d.num_crossings());
    g.adj.assign(static_cast<std::size_t>(4 * n), -1);
    g.sign.resize(static_cast<std::size_t>(n));
    std::map<int, int> first;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.crossings()[static_cast<std::size_t>(c)];
      g.sign[static_cast<std::size_t>(c)] = static_cast<int8_t>(x.sign);
      for (int k = 0; k < 4; ++k) {
        int h = 4 * c + k;
        auto [it, fresh] = first.emplace(x.edges[static_cast<std::size_t>(k)], h);
        if (!fresh) {
          g.adj[static_cast<std::size_t>(h)] = it->second;
          g.adj[static_cast<std::size_t>(it->second)] = h;
        }
      }
    }
    g.loops = d.free_loop_count();
    return g;
  }

  // Removes crossings, joining slot k to slot partner[c][k] at each.  Closed
  // cycles formed entirely inside removed crossings become free loops; the
  // number formed is returned.
  int remove(const std::vector<int>& cs, const std::vector<std::array<int, 4>>& partner) {
    const int n = size();
    std::vector<int> idx(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cs.size(); ++i) idx[static_cast<std::size_t>(cs[i])] = static_cast<int>(i);
    auto removed = [&](int h) { return idx[static_cast<std::size_t>(h >> 2)] >= 0; };
    auto pair = [&](int h) {
      return (h & ~3) | partner[static_cast<std::size_t>(idx[static_cast<std::size_t>(h >> 2)])][static_cast<std::size_t>(h & 3)];
    };
    std::vector<char> seen(adj.size(), 0);
    int cycles = 0;
    for (int c : cs) {
      for (int k = 0; k < 4; ++k) {
        const int h = 4 * c + k;
        if (seen[static_cast<std::size_t>(h)]) continue;
        // Walk through the pairing side first.
        int cur = h;
        int end_b = -1;
        bool closed = false;
        seen[static_cast<std::size_t>(cur)] = 1;
        while (true) {
          int q = pair(cur);
          seen[static_cast<std::size_t>(q)] = 1;
          int nxt = adj[static_cast<std::size_t>(q)];
          if (!removed(nxt)) {
            end_b = nxt;
            break;
          }
          if (nxt == h) {
            closed = true;
            break;
          }
          cur = nxt;
          seen[static_cast<std::size_t>(cur)] = 1;
        }
        if (closed) {
          ++cycles;
          continue;
        }
        int nxt = adj[static_cast<std::size_t>(h)];
        while (removed(nxt)) {
          seen[static_cast<std::size_t>(nxt)] = 1;
          int q = pair(nxt);
          seen[static_cast<std::size_t>(q)] = 1;
          nxt = adj[static_cast<std::size_t>(q)];
        }
        adj[static_cast<std::size_t>(nxt)] = end_b;
        adj[static_cast<std::size_t>(end_b)] = nxt;
      }
    }
    loops += cycles;
    compact(idx);
    return cycles;
  }

  void compact(const std::vector<int>& removed_idx) {
    const int n = size();
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int m = 0;
    for (int c = 0; c < n; ++c)
      if (removed_idx[static_cast<std::size_t>(c)] < 0) remap[static_cast<std::size_t>(c)] = m++;
    std::vector<int> nadj(static_cast<std::size_t>(4 * m));
    std::vector<int8_t> nsign(static_cast<std::size_t>(m));
    for (int c = 0; c < n; ++c) {
      int nc = remap[static_cast<std::size_t>(c)];
      if (nc < 0) continue;
      nsign[static_cast<std::size_t>(nc)] = sign[static_cast<std::size_t>(c)];
      for (int k = 0; k < 4; ++k) {
        int t = adj[static_cast<std::size_t>(4 * c + k)];
        nadj[static_cast<std::size_t>(4 * nc + k)] = 4 * remap[static_cast<std::size_t>(t >> 2)] + (t & 3);
      }
    }
    adj = std::move(nadj);
    sign = std::move(nsign);
  }

  // Rotates crossing c so that new slot k is old slot (k + r) mod 4.
  void rotate(int c, int r) {
    if ((r & 3) == 0) return;
    std::array<int, 4> old;
    for (int k = 0; k < 4; ++k) old[static_cast<std::size_t>(k)] = adj[static_cast<std::size_t>(4 * c + k)];
    auto renum = [&](int h) { return (h >> 2) == c ? 4 * c + (((h & 3) - r + 8) & 3) : h; };
    for (int k = 0; k < 4; ++k) {
      int t = renum(old[static_cast<std::size_t>((k + r) & 3)]);
      adj[static_cast<std::size_t>(4 * c + k)] = t;
    }
    for (int k = 0; k < 4; ++k) {
      int t = adj[static_cast<std::size_t>(4 * c + k)];
      if ((t >> 2) != c) adj[static_cast<std::size_t>(t)] = 4 * c + k;
    }
  }

  void switch_crossing(int c) {
    int r = sign[static_cast<std::size_t>(c)] > 0 ? 3 : 1;
    rotate(c, r);
    sign[static_cast<std::size_t>(c)] = static_cast<int8_t>(-sign[static_cast<std::size_t>(c)]);
  }

  // Gives every strand a consistent orientation, keeping existing directions
  // where they are already consistent, then restores the slot conventions.
  void reorient() {
    const int n = size();
    std::vector<int8_t> dir(adj.size(), -1);  // 1 = incoming
    for (int h0 = 0; h0 < 4 * n; ++h0) {
      if (dir[static_cast<std::size_t>(h0)] >= 0) continue;
      int start = is_in(h0) ? through(h0) : h0;
      if (dir[static_cast<std::size_t>(start)] >= 0) start = h0;
      int h = start;
      do {
        dir[static_cast<std::size_t>(h)] = 0;
        int a = adj[static_cast<std::size_t>(h)];
        dir[static_cast<std::size_t>(a)] = 1;
        h = through(a);
      } while (h != start);
    }
    for (int c = 0; c < n; ++c) {
      if (dir[static_cast<std::size_t>(4 * c)] == 0) {
        rotate(c, 2);
        std::swap(dir[static_cast<std::size_t>(4 * c)], dir[static_cast<std::size_t>(4 * c + 2)]);
        std::swap(dir[static_cast<std::size_t>(4 * c + 1)], dir[static_cast<std::size_t>(4 * c + 3)]);
      }
      sign[static_cast<std::size_t>(c)] = dir[static_cast<std::size_t>(4 * c + 3)] == 1 ? 1 : -1;
    }
  }

  // Clears curls and removable bigons; returns the accumulated v exponent.
  int simplify() {
    int vexp = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      const int n = size();
      for (int c = 0; c < n && !changed; ++c) {
        for (int k = 0; k < 4; ++k) {
          int t = adj[static_cast<std::size_t>(4 * c + k)];
          if (t == 4 * c + ((k + 1) & 3)) {
            // Curl through slots k, k+1; the strand continues k+2 <-> k+3.
            vexp -= sign[static_cast<std::size_t>(c)];
            std::array<int, 4> p{};
            p[static_cast<std::size_t>(k)] = (k + 1) & 3;
            p[static_cast<std::size_t>((k + 1) & 3)] = k;
            p[static_cast<std::size_t>((k + 2) & 3)] = (k + 3) & 3;
            p[static_cast<std::size_t>((k + 3) & 3)] = (k + 2) & 3;
            int made = remove({c}, {p});
            loops -= 1;  // the curl itself is not a component
            (void)made;
            changed = true;
            break;
          }
        }
      }
      if (changed) continue;
      for (int x = 0; x < n && !changed; ++x) {
        for (int k = 0; k < 4; ++k) {
          int t = adj[static_cast<std::size_t>(4 * x + k)];
          int y = t >> 2, m = t & 3;
          if (y == x) continue;
          if (adj[static_cast<std::size_t>(4 * x + ((k + 1) & 3))] != 4 * y + ((m + 3) & 3)) continue;
          if ((k & 1) != (m & 1)) continue;
          std::array<int, 4> straight{2, 3, 0, 1};
          remove({std::min(x, y), std::max(x, y)}, {straight, straight});
          changed = true;
          break;
        }
      }
    }
    return vexp;
  }

  // Crossing sets of the connected pieces.
  std::vector<std::vector<int>> pieces() const {
    const int n = size();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
      if (owner[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<int> stack{s}, members;
      owner[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        members.push_back(c);
        for (int k = 0; k < 4; ++k) {
          int y = adj[static_cast<std::size_t>(4 * c + k)] >> 2;
          if (owner[static_cast<std::size_t>(y)] < 0) {
            owner[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
            stack.push_back(y);
          }
        }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

  SlotGraph restricted(const std::vector<int>& members) const {
    SlotGraph g;
    std::vector<int> remap(static_cast<std::size_t>(size()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) remap[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    g.adj.resize(4 * members.size());
    g.sign.resize(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      int c = members[i];
      g.sign[i] = sign[static_cast<std::size_t>(c)];
      for (int k = 0; k < 4; ++k) {
        int t = adj[static_cast<std::size_t>(4 * c + k)];
        g.adj[4 * i + static_cast<std::size_t>(k)] = 4 * remap[static_cast<std::size_t>(t >> 2)] + (t & 3);
      }
    }
    return g;
  }

  // Strand components as arrival-slot sequences, in order of discovery.
  std::vector<std::vector<int>> components() const {
    std::vector<char> seen(adj.size(), 0);
    std::vector<std::vector<int>> out;
    for (int h0 = 0; h0 < static_cast<int>(adj.size()); ++h0) {
      if (!is_in(h0) || seen[static_cast<std::size_t>(h0)]) continue;
      std::vector<int> seq;
      int h = h0;
      do {
        seen[static_cast<std::size_t>(h)] = 1;
        seq.push_back(h);
        h = adj[static_cast<std::size_t>(through(h))];
      } while (h != h0);
      out.push_back(std::move(seq));
    }
    return out;
  }

  // Canonical code of a connected, loop-free graph: the arrival sequence of
  // a deterministic walk, minimized over all starting arrivals.
  std::string canonical_key() const {
    const int n = size();
    std::vector<int> best;
    std::vector<int> cur;
    std::vector<int> label(static_cast<std::size_t>(n));
    std::vector<char> walked(adj.size());
    for (int start = 0; start < 4 * n; ++start) {
      if (!is_in(start)) continue;
      std::fill(label.begin(), label.end(), -1);
      std::fill(walked.begin(), walked.end(), 0);
      std::vector<int> order;  // crossings by label
      cur.clear();
      bool worse = false, better = best.empty();
      auto emit = [&](int v) {
        if (!better) {
          std::size_t i = cur.size();
          if (v > best[i]) worse = true;
          else if (v < best[i]) better = true;
        }
        cur.push_back(v);
      };
      int next_label = 0;
      int h0 = start;
      while (!worse) {
        int h = h0;
        do {
          walked[static_cast<std::size_t>(h)] = 1;
          int c = h >> 2;
          if (label[static_cast<std::size_t>(c)] < 0) {
            label[static_cast<std::size_t>(c)] = next_label++;
            order.push_back(c);
            emit(-1 - sign[static_cast<std::size_t>(c)]);  // -2 or 0: marks a new crossing
          }
          emit(4 * label[static_cast<std::size_t>(c)] + (h & 3));
          h = adj[static_cast<std::size_t>(through(h))];
        } while (h != h0 && !worse);
        if (worse) break;
        // Next strand: lowest-labeled crossing with an unwalked arrival.
        int nxt = -1;
        for (int c : order) {
          if (!walked[static_cast<std::size_t>(4 * c)]) { nxt = 4 * c; break; }
          int o = 4 * c + over_in(c);
          if (!walked[static_cast<std::size_t>(o)]) { nxt = o; break; }
        }
        if (nxt < 0) break;
        emit(-3);
        h0 = nxt;
      }
      if (!worse && better) best = cur;
    }
    std::string key;
    key.reserve(best.size() * 2);
    for (int v : best) {
      unsigned u = static_cast<unsigned>(v + 4);
      key.push_back(static_cast<char>(u & 0xff));
      key.push_back(static_cast<char>((u >> 8) & 0xff));
    }
    return key;
  }
};

}  // namespace detail

// One evaluator per flavor; its memo persists across calls so related
// diagrams share work.  Safe to use from several threads.
class SkeinEvaluator {
 public:
  SkeinEvaluator(Flavor flavor, EvalConfig cfg = {}) : flavor_(flavor), cfg_(cfg) {
    const Characteristic ch = cfg_.characteristic;
    z_ = RingElem::z(ch);
    delta_ = flavor == Flavor::homfly ? RingElem::delta_homfly(ch) : RingElem::delta_kauffman(ch);
    one_ = RingElem::from_int(1, ch);
  }

  Flavor flavor() const { return flavor_; }
  const EvalConfig& config() const { return cfg_; }

  RingElem evaluate(const LinkDiagram& d) {
    d.require_valid();
    if (static_cast<long long>(d.num_crossings()) > cfg_.max_crossings)
      throw BudgetExceeded(d.num_crossings(), cfg_.max_crossings, d.name().empty() ? "" : "'" + d.name() + "'");
    return eval(detail::SlotGraph::from(d));
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }
  std::size_t nodes() const { return nodes_; }

 private:
  RingElem vpow(int e) const {
    return RingElem(LaurentPoly::v(e, cfg_.characteristic));
  }

  RingElem eval(detail::SlotGraph g) {
    ++nodes_;
    int vexp = g.simplify();
    RingElem factor = vpow(vexp) * delta_.pow(static_cast<unsigned>(g.loops));
    g.loops = 0;
    if (g.size() == 0) return factor;
    auto parts = g.pieces();
    if (parts.size() > 1) {
      RingElem acc = factor;
      for (const auto& p : parts) acc *= eval_connected(g.restricted(p));
      return acc;
    }
    return factor * eval_connected(std::move(g));
  }

  RingElem eval_connected(detail::SlotGraph g) {
    std::string key;
    if (cfg_.memo_enabled) {
      key = g.canonical_key();
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    RingElem value = resolve(std::move(g));
    if (cfg_.memo_enabled) {
      std::unique_lock lock(mutex_);
      memo_.emplace(std::move(key), value);
    }
    return value;
  }

  // Among the crossings the chosen order must switch, prefers the one whose
  // switched and smoothed diagrams simplify furthest.
  int pick_crossing(const detail::SlotGraph& g, const std::vector<int>& seq, std::size_t start) const {
    std::vector<int> bad;
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    for (std::size_t j = 0; j < seq.size(); ++j) {
      int h = seq[(start + j) % seq.size()];
      int c = h >> 2;
      if (seen[static_cast<std::size_t>(c)]++) continue;
      if ((h & 3) == 0) bad.push_back(c);
    }
    if (bad.size() == 1) return bad[0];
    int best = bad[0];
    long best_score = -1;
    for (int c : bad) {
      detail::SlotGraph sw = g;
      sw.switch_crossing(c);
      sw.simplify();
      long score = static_cast<long>(sw.size());
      const bool pos = g.sign[static_cast<std::size_t>(c)] > 0;
      if (flavor_ == Flavor::homfly) {
        detail::SlotGraph sm = g;
        sm.remove({c}, {pos ? std::array<int, 4>{1, 0, 3, 2} : std::array<int, 4>{3, 2, 1, 0}});
        sm.simplify();
        score += static_cast<long>(sm.size());
      } else {
        for (auto p : {std::array<int, 4>{1, 0, 3, 2}, std::array<int, 4>{3, 2, 1, 0}}) {
          detail::SlotGraph sm = g;
          sm.remove({c}, {p});
          sm.reorient();
          sm.simplify();
          score += static_cast<long>(sm.size());
        }
      }
      if (best_score < 0 || score < best_score) {
        best_score = score;
        best = c;
      }
    }
    return best;
  }

  // Chooses the component and basepoint that need the fewest switches.
  RingElem resolve(detail::SlotGraph g) {
    const auto comps = g.components();
    const int n = g.size();
    std::vector<int> comp_of_slot(static_cast<std::size_t>(4 * n), -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (int h : comps[i]) {
        comp_of_slot[static_cast<std::size_t>(h)] = static_cast<int>(i);
        comp_of_slot[static_cast<std::size_t>(detail::SlotGraph::through(h))] = static_cast<int>(i);
      }
    std::size_t best_comp = 0, best_start = 0;
    int best_bad = -1;
    std::vector<int> visits(static_cast<std::size_t>(n));
    for (std::size_t ci = 0; ci < comps.size() && best_bad != 0; ++ci) {
      const auto& seq = comps[ci];
      for (std::size_t s = 0; s < seq.size(); ++s) {
        std::fill(visits.begin(), visits.end(), 0);
        int bad = 0;
        for (std::size_t j = 0; j < seq.size(); ++j) {
          int h = seq[(s + j) % seq.size()];
          int c = h >> 2;
          if (visits[static_cast<std::size_t>(c)]++ == 0 && (h & 3) == 0) ++bad;
          if (best_bad >= 0 && bad >= best_bad) break;
        }
        if (best_bad < 0 || bad < best_bad) {
          best_bad = bad;
          best_comp = ci;
          best_start = s;
        }
        if (best_bad == 0) break;
      }
    }
    if (best_bad == 0) {
      // Lift the component off: remove its crossings straight through.
      std::vector<int> cs;
      int self = 0;
      std::vector<char> mark(static_cast<std::size_t>(n), 0);
      for (int h : comps[best_comp]) {
        int c = h >> 2;
        if (mark[static_cast<std::size_t>(c)]) {
          self += g.sign[static_cast<std::size_t>(c)];
          continue;
        }
        mark[static_cast<std::size_t>(c)] = 1;
        cs.push_back(c);
      }
      std::array<int, 4> straight{2, 3, 0, 1};
      g.remove(cs, std::vector<std::array<int, 4>>(cs.size(), straight));
      return vpow(-self) * eval(std::move(g));
    }
    const int x = pick_crossing(g, comps[best_comp], best_start);
    const int sgn = g.sign[static_cast<std::size_t>(x)];
    detail::SlotGraph switched = g;
    switched.switch_crossing(x);
    if (flavor_ == Flavor::homfly) {
      detail::SlotGraph smooth = g;
      std::array<int, 4> p = sgn > 0 ? std::array<int, 4>{1, 0, 3, 2} : std::array<int, 4>{3, 2, 1, 0};
      smooth.remove({x}, {p});
      RingElem a = eval(std::move(switched));
      RingElem b = eval(std::move(smooth));
      return sgn > 0 ? a + z_ * b : a - z_ * b;
    }
    detail::SlotGraph l0 = g, linf = g;
    l0.remove({x}, {std::array<int, 4>{1, 0, 3, 2}});
    linf.remove({x}, {std::array<int, 4>{3, 2, 1, 0}});
    l0.reorient();
    linf.reorient();
    RingElem a = eval(std::move(switched));
    RingElem b = eval(std::move(l0));
    RingElem c = eval(std::move(linf));
    return a + z_ * (b - c);
  }

  Flavor flavor_;
  EvalConfig cfg_;
  RingElem z_, delta_, one_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, RingElem> memo_;
  std::size_t nodes_ = 0;
};

inline RingElem homfly(const LinkDiagram& d, const EvalConfig& cfg = {}) {
  SkeinEvaluator ev(Flavor::homfly, cfg);
  return ev.evaluate(d);
}

inline RingElem kauffman(const LinkDiagram& d, const EvalConfig& cfg = {}) {
  SkeinEvaluator ev(Flavor::kauffman, cfg);
  return ev.evaluate(d);
}

// Replaces every component by its blackboard antiparallel 2-cable.
inline LinkDiagram antiparallel_double(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (int c = d.num_components() - 1; c >= 0; --c) {
    out = cable(out, c, 2);
    out = reverse(out, {c + 1});
  }
  out.set_name(d.name().empty() ? "" : d.name() + "/doubled");
  return out;
}

// Sum over component subsets S of (-1)^(k-|S|) P(antiparallel double of d_S).
inline RingElem adjoint_homfly(const LinkDiagram& d, const EvalConfig& cfg = {},
                               SkeinEvaluator* shared = nullptr) {
  d.require_valid();
  const int k = d.num_components();
  if (k > 20) throw std::invalid_argument("adjoint_homfly: too many components");
  std::unique_ptr<SkeinEvaluator> own;
  SkeinEvaluator* ev = shared;
  if (!ev) {
    own = std::make_unique<SkeinEvaluator>(Flavor::homfly, cfg);
    ev = own.get();
  }
  const unsigned total = 1u << k;
  std::vector<LinkDiagram> terms(total);
  for (unsigned mask = 0; mask < total; ++mask) {
    std::vector<int> keep;
    for (int c = 0; c < k; ++c)
      if (mask & (1u << c)) keep.push_back(c);
    terms[mask] = antiparallel_double(restrict_components(d, keep));
    if (static_cast<long long>(terms[mask].num_crossings()) > ev->config().max_crossings) {
      std::string subset = "{";
      for (std::size_t i = 0; i < keep.size(); ++i) subset += (i ? "," : "") + std::to_string(keep[i] + 1);
      throw BudgetExceeded(terms[mask].num_crossings(), ev->config().max_crossings,
                           "adjoint term for components " + subset + "}");
    }
  }
  auto term_value = [&](unsigned mask) {
    RingElem p = ev->evaluate(terms[mask]);
    int size = __builtin_popcount(mask);
    return ((k - size) % 2 == 0) ? p : -p;
  };
  RingElem acc(ev->config().characteristic);
  const int par = std::max(1, ev->config().parallelism);
  if (par == 1) {
    for (unsigned mask = 0; mask < total; ++mask) acc += term_value(mask);
    return acc;
  }
  // Evaluate subsets concurrently; sum in subset order for determinism.
  std::vector<std::optional<RingElem>> values(total);
  for (unsigned begin = 0; begin < total; begin += static_cast<unsigned>(par)) {
    std::vector<std::future<RingElem>> futs;
    unsigned end = std::min(total, begin + static_cast<unsigned>(par));
    for (unsigned mask = begin; mask < end; ++mask)
      futs.push_back(std::async(std::launch::async, term_value, mask));
    for (unsigned mask = begin; mask < end; ++mask) values[mask] = futs[mask - begin].get();
  }
  for (auto& v : values) acc += *v;
  return acc;
}

struct SkeinProbeReport {
  Flavor flavor = Flavor::homfly;
  std::size_t crossing = 0;
  int sign = 0;
  RingElem original, switched, smoothing0, smoothing_inf;
  bool holds = false;
};

// Builds the switched and smoothed diagrams at one crossing and checks the
// skein relation exactly.
inline SkeinProbeReport skein_relation_probe(const LinkDiagram& d, std::size_t crossing, Flavor flavor,
                                             const EvalConfig& cfg = {}) {
  d.require_valid();
  if (crossing >= d.num_crossings()) throw std::invalid_argument("skein_relation_probe: no such crossing");
  SkeinEvaluator ev(flavor, cfg);
  SkeinProbeReport r;
  r.flavor = flavor;
  r.crossing = crossing;
  r.sign = d.crossings()[crossing].sign;
  r.original = ev.evaluate(d);
  r.switched = ev.evaluate(switch_crossing(d, crossing));
  const RingElem z = RingElem::z(cfg.characteristic);
  if (flavor == Flavor::homfly) {
    r.smoothing0 = ev.evaluate(smooth_crossing(d, crossing, Smoothing::oriented));
    RingElem lhs = r.sign > 0 ? r.original - r.switched : r.switched - r.original;
    r.holds = lhs == z * r.smoothing0;
  } else {
    r.smoothing0 = ev.evaluate(smooth_crossing(d, crossing, Smoothing::zero));
    r.smoothing_inf = ev.evaluate(smooth_crossing(d, crossing, Smoothing::infinity));
    r.holds = r.original - r.switched == z * (r.smoothing0 - r.smoothing_inf);
  }
  return r;
}

}  // namespace skeinlab
