#pragma once

// Acceptance suite shared by the CLI and the test binary.  The report is
// deterministic; timings go only to the progress stream.

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skeinlab/annulus.hpp"
#include "skeinlab/eigen.hpp"
#include "skeinlab/io.hpp"
#include "skeinlab/partition.hpp"
#include "skeinlab/skein_eval.hpp"
#include "skeinlab/verify.hpp"

namespace skeinlab {

struct AcceptanceOptions {
  bool extended = false;  // include the hopf_plus satellite case
  int parallelism = 1;
  std::ostream* progress = nullptr;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
  double seconds = 0;
  double limit = 0;  // seconds
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;

  bool pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return !criteria.empty();
  }

  std::string line(const CriterionResult& c) const {
    std::ostringstream os;
    os << "criterion " << (c.id < 10 ? " " : "") << c.id << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.title;
    if (!c.summary.empty()) os << " (" << c.summary << ")";
    return os.str();
  }

  std::string table() const {
    std::string out;
    for (const auto& c : criteria) out += line(c) + "\n";
    return out;
  }

  nlohmann::ordered_json to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : criteria) {
      nlohmann::ordered_json o;
      o["criterion"] = c.id;
      o["title"] = c.title;
      o["pass"] = c.pass;
      o["summary"] = c.summary;
      o["details"] = c.details;
      arr.push_back(o);
    }
    nlohmann::ordered_json j;
    j["criteria"] = arr;
    j["pass"] = pass();
    return j;
  }
};

namespace detail {

class CriterionRunner {
 public:
  explicit CriterionRunner(const AcceptanceOptions& opts) : opts_(opts) {}

  void run(AcceptanceReport& rep, int id, std::string title, double limit,
           const std::function<void(CriterionResult&)>& body) {
    CriterionResult c;
    c.id = id;
    c.title = std::move(title);
    c.limit = limit;
    c.pass = true;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.details.push_back(std::string("error: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.seconds > limit) {
      c.pass = false;
      c.details.push_back("over the runtime limit of " + std::to_string(static_cast<long>(limit)) + " s");
    }
    if (opts_.progress)
      *opts_.progress << "[criterion " << id << "] " << (c.pass ? "pass" : "FAIL") << " in " << c.seconds << " s"
                      << std::endl;
    rep.criteria.push_back(std::move(c));
  }

 private:
  AcceptanceOptions opts_;
};

inline void append_report(CriterionResult& c, const VerificationReport& r) {
  std::istringstream in(r.to_text(false));
  for (std::string line; std::getline(in, line);) c.details.push_back(line);
  c.pass = c.pass && r.pass;
}

}  // namespace detail

// Budget declared for the satellite diagrams: the largest adjoint term of the
// hopf_plus case has 64 crossings.
inline constexpr int kSatelliteBudget = 64;

// Criteria 1 to 9.
inline AcceptanceReport run_acceptance_suite(const AcceptanceOptions& opts = {}) {
  AcceptanceReport rep;
  detail::CriterionRunner runner(opts);
  EigenTable table;
  EvalConfig base;
  base.parallelism = opts.parallelism;

  runner.run(rep, 1, "c_lambda = s_{lambda,lambda} + 1 for |lambda| <= 8", 10, [&](CriterionResult& c) {
    auto parts = enumerate_partitions(8);
    std::size_t bad = 0;
    for (const auto& p : parts) {
      if (table.c(p) != s_of(p, p) + RingElem::from_int(1)) {
        ++bad;
        c.details.push_back("mismatch at " + p.to_string());
      }
    }
    c.pass = bad == 0;
    c.summary = std::to_string(parts.size()) + " partitions";
  });

  runner.run(rep, 2, "c_lambda pairwise distinct in characteristic 2 for |lambda| <= 8", 30,
             [&](CriterionResult& c) {
               DistinctnessReport d = check_distinct(8, &table);
               c.pass = d.distinct;
               c.summary = std::to_string(d.partitions) + " partitions, " + std::to_string(d.comparisons) +
                           " comparisons";
               if (d.collision)
                 c.details.push_back("collision " + d.collision->first.to_string() + " ~ " +
                                     d.collision->second.to_string());
             });

  runner.run(rep, 3, "Frobenius content identity for |lambda| <= 10", 10, [&](CriterionResult& c) {
    auto parts = enumerate_partitions(10);
    for (const auto& p : parts) {
      if (!frobenius_identity_check(p)) {
        c.pass = false;
        c.details.push_back("fails at " + p.to_string());
      }
    }
    c.summary = std::to_string(parts.size()) + " partitions";
  });

  runner.run(rep, 4, "evaluator soundness on the corpus", 60, [&](CriterionResult& c) {
    const auto links = corpus::all();
    std::size_t probes = 0, products = 0, curls = 0, reversals = 0;
    for (Flavor f : {Flavor::homfly, Flavor::kauffman}) {
      SkeinEvaluator ev(f, base);
      std::vector<RingElem> values;
      for (const auto& d : links) values.push_back(ev.evaluate(d));
      for (std::size_t k = 0; k < links.size(); ++k) {
        const auto& d = links[k];
        for (std::size_t i = 0; i < d.num_crossings(); ++i, ++probes) {
          if (!skein_relation_probe(d, i, f, base).holds) {
            c.pass = false;
            c.details.push_back(to_string(f) + " skein relation fails at " + d.name() + " crossing " +
                                std::to_string(i + 1));
          }
        }
        for (std::size_t m = 0; m < links.size(); ++m, ++products) {
          if (ev.evaluate(disjoint_union(d, links[m])) != values[k] * values[m]) {
            c.pass = false;
            c.details.push_back(to_string(f) + " not multiplicative on " + d.name() + " + " + links[m].name());
          }
        }
        std::vector<int> sites;
        for (const auto& [e, comp] : d.component_of_edge()) sites.push_back(e);
        for (const auto& [comp, count] : d.free_loops())
          if (count == 1) sites.push_back(-(comp + 1));
        for (int site : sites) {
          for (int sign : {1, -1}) {
            ++curls;
            const RingElem expect = values[k] * RingElem(LaurentPoly::v(-sign));
            if (ev.evaluate(add_curl(d, site, sign)) != expect) {
              c.pass = false;
              c.details.push_back(to_string(f) + " curl factor wrong on " + d.name() + " site " +
                                  std::to_string(site) + " sign " + std::to_string(sign));
            }
          }
        }
        if (f == Flavor::homfly) {
          ++reversals;
          if (ev.evaluate(reverse_all(d)) != values[k]) {
            c.pass = false;
            c.details.push_back("Homfly changes under reversal of " + d.name());
          }
        }
      }
    }
    c.summary = std::to_string(probes) + " skein probes, " + std::to_string(products) + " unions, " +
                std::to_string(curls) + " curls, " + std::to_string(reversals) + " reversals";
  });

  runner.run(rep, 5, "meridians around the unknot match the eigenvalues, r = 1..3", 60, [&](CriterionResult& c) {
    VerifyContext ctx(base);
    VerificationReport r = eigen_consistency(ctx, 3);
    detail::append_report(c, r);
    c.summary = std::to_string(r.checks.size()) + " identities";
  });

  runner.run(rep, 6, "adjoint Homfly = bar(Kauffman) mod 2 on the corpus", 600, [&](CriterionResult& c) {
    VerifyContext ctx(base);
    std::size_t largest = 0;
    for (const auto& d : corpus::all()) {
      detail::append_report(c, verify_rudolph(d, ctx));
      largest = std::max(largest, detail::largest_adjoint_term(d));
    }
    c.summary = std::to_string(corpus::names().size()) + " links, largest adjoint term " + std::to_string(largest) +
                " crossings";
  });

  runner.run(rep, 7, "satellite relation for y_lambda, |lambda| = 2", opts.extended ? 3600 + 600 : 600,
             [&](CriterionResult& c) {
               EvalConfig cfg = base;
               cfg.max_crossings = kSatelliteBudget;
               struct Case {
                 std::string link;
                 int comp;
                 std::string lambda;
                 double limit;
               };
               std::vector<Case> cases{{"unknot", 0, "2", 300}, {"unknot", 0, "1,1", 300}};
               if (opts.extended) cases.push_back({"hopf_plus", 0, "2", 3600});
               VerifyContext ctx(cfg);
               for (const auto& k : cases) {
                 auto t0 = std::chrono::steady_clock::now();
                 VerificationReport r = verify_main(corpus::get(k.link), k.comp, Partition::parse(k.lambda), ctx);
                 double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                 bool complete = r.stages.size() == 4;
                 for (const auto& s : r.stages) complete = complete && s.pass;
                 c.pass = c.pass && complete;
                 detail::append_report(c, r);
                 if (secs > k.limit) {
                   c.pass = false;
                   c.details.push_back(k.link + " " + k.lambda + " over the runtime limit");
                 }
                 if (opts.progress) *opts.progress << "  " << k.link << " (" << k.lambda << "): " << secs << " s" << std::endl;
               }
               c.summary = opts.extended ? "unknot (2), unknot (1,1), hopf_plus component 1 (2)"
                                         : "unknot (2), unknot (1,1); hopf_plus case runs with --extended";
             });

  runner.run(rep, 8, "realize_symbolic = X(c_lambda) y_lambda for |lambda| <= 4, every rho", 30,
             [&](CriterionResult& c) {
               std::size_t plans = 0;
               for (const auto& lambda : enumerate_partitions(4)) {
                 if (lambda.empty()) continue;
                 for (const auto& plan : all_expansions(lambda, &table)) {
                   ++plans;
                   AnnulusVecK got = realize_symbolic(plan, &table);
                   if (!(got == AnnulusVecK::basis(lambda, plan.total_scale()))) {
                     c.pass = false;
                     c.details.push_back("mismatch for " + lambda.to_string() + " via " + plan.rho.to_string());
                   }
                 }
               }
               c.summary = std::to_string(plans) + " plans";
             });

  runner.run(rep, 9, "R_rho R_1 branching structure with n in {0,1} for |rho| <= 4", 30, [&](CriterionResult& c) {
    std::size_t count = 0, nonzero = 0;
    for (const auto& rho : enumerate_partitions(4)) {
      ++count;
      HsrReport h = hsr_structure_check(rho);
      for (const auto& [key, n] : h.n) nonzero += n != 0;
      if (!h.passed() || !h.binary) {
        c.pass = false;
        c.details.push_back(rho.to_string() + ": " + (h.failure.empty() ? "n outside {0,1}" : h.failure));
      }
    }
    c.summary = std::to_string(count) + " partitions, " + std::to_string(nonzero) + " off-diagonal pairs";
  });

  return rep;
}

// Runs the suite twice from scratch and adds the determinism criterion.
inline AcceptanceReport run_acceptance(const AcceptanceOptions& opts = {}) {
  if (opts.progress) *opts.progress << "first run" << std::endl;
  AcceptanceReport first = run_acceptance_suite(opts);
  if (opts.progress) *opts.progress << "second run" << std::endl;
  AcceptanceReport second = run_acceptance_suite(opts);
  const std::string a = first.to_json().dump(2), b = second.to_json().dump(2);
  CriterionResult c;
  c.id = 10;
  c.title = "two acceptance runs give byte-identical reports";
  c.pass = a == b;
  c.summary = std::to_string(a.size()) + " bytes";
  if (!c.pass) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    c.details.push_back("reports differ at byte " + std::to_string(i));
  }
  first.criteria.push_back(c);
  return first;
}

}  // namespace skeinlab
