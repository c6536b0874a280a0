#ifndef BFSS_LAWS_HPP
#define BFSS_LAWS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bfss/algebra.hpp"
#include "bfss/dataset.hpp"

namespace bfss {

struct LawConfig {
  std::uint64_t seed = 42;
  long trials = 1000;
  std::size_t max_objects = 6;  // |U| drawn from 1..max_objects
  std::size_t max_params = 5;   // parameter subsets drawn from e1..e<max_params>
  // Test hook: replaces grade_complement inside the suite so that a broken
  // complement is demonstrably caught. Never set by the CLI.
  std::function<BipolarGrade(const BipolarGrade&)> complement_override;
};

struct LawOutcome {
  std::string name;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::string counterexample;  // operands of the first failure, minimized
};

struct LawReport {
  long trials = 0;
  std::vector<LawOutcome> laws;

  long total_failures() const {
    long n = 0;
    for (const auto& l : laws) n += l.failed;
    return n;
  }
};

// Deterministic generators: mt19937_64 output is fixed by the standard and
// no std distribution is used, so instance streams are identical across
// platforms for a given seed. Grades live on the 0.1 grid, where min/max
// collisions and ties are most likely.

namespace detail {

inline std::size_t draw(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace detail

inline UniversePtr random_universe(std::mt19937_64& rng, std::size_t max_objects) {
  const std::size_t n = 1 + detail::draw(rng, max_objects);
  std::vector<std::string> objects;
  objects.reserve(n);
  for (std::size_t i = 0; i < n; ++i) objects.push_back("u" + std::to_string(i + 1));
  return make_universe(std::move(objects));
}

inline BipolarGrade random_grade(std::mt19937_64& rng) {
  const auto pos = static_cast<std::int32_t>(detail::draw(rng, 11)) * 1000;
  const auto neg = -static_cast<std::int32_t>(detail::draw(rng, 11)) * 1000;
  return {Degree::from_ticks(pos), Degree::from_ticks(neg)};
}

inline BipolarFuzzySoftSet random_soft_set(std::mt19937_64& rng, const UniversePtr& universe,
                                           std::size_t max_params) {
  std::vector<std::string> pool;
  pool.reserve(max_params);
  for (std::size_t i = 0; i < max_params; ++i) pool.push_back("e" + std::to_string(i + 1));
  for (std::size_t i = pool.size(); i-- > 1;) std::swap(pool[i], pool[detail::draw(rng, i + 1)]);
  pool.resize(1 + detail::draw(rng, max_params));

  std::vector<BipolarFuzzySet> values;
  values.reserve(pool.size());
  for (std::size_t e = 0; e < pool.size(); ++e) {
    std::vector<BipolarGrade> grades;
    grades.reserve(universe->size());
    for (std::size_t x = 0; x < universe->size(); ++x) grades.push_back(random_grade(rng));
    values.emplace_back(universe, std::move(grades));
  }
  return {universe, ParameterSet(std::move(pool)), std::move(values)};
}

namespace detail {

struct LawTrial {
  BipolarFuzzySoftSet f, g, h;
  // sup = f extended-union another draw, so soft_subset(f, sup) holds by
  // construction and the order laws are exercised non-vacuously.
  BipolarFuzzySoftSet sup;
  BipolarGrade ga, gb, gc;
};

inline LawTrial random_trial(std::mt19937_64& rng, const LawConfig& cfg) {
  auto u = random_universe(rng, cfg.max_objects);
  auto f = random_soft_set(rng, u, cfg.max_params);
  auto g = random_soft_set(rng, u, cfg.max_params);
  auto h = random_soft_set(rng, u, cfg.max_params);
  auto sup = soft_extended_union(f, random_soft_set(rng, u, cfg.max_params));
  auto ga = random_grade(rng);
  auto gb = random_grade(rng);
  auto gc = random_grade(rng);
  return {std::move(f), std::move(g), std::move(h), std::move(sup), ga, gb, gc};
}

enum class LawOperand { F, G, H, Sup, GradeA, GradeB, GradeC };

inline bool is_soft_operand(LawOperand op) {
  return op == LawOperand::F || op == LawOperand::G || op == LawOperand::H ||
         op == LawOperand::Sup;
}

inline const BipolarFuzzySoftSet& soft_operand(const LawTrial& t, LawOperand op) {
  switch (op) {
    case LawOperand::F: return t.f;
    case LawOperand::G: return t.g;
    case LawOperand::H: return t.h;
    default: return t.sup;
  }
}

struct Law {
  std::string name;
  std::vector<LawOperand> operands;
  std::function<std::optional<bool>(const LawTrial&)> check;  // nullopt = skip
};

inline BipolarFuzzySoftSet map_grades(const BipolarFuzzySoftSet& s,
                                      const std::function<BipolarGrade(const BipolarGrade&)>& fn) {
  std::vector<BipolarFuzzySet> values;
  values.reserve(s.size());
  for (const auto& v : s.values()) {
    std::vector<BipolarGrade> grades;
    grades.reserve(v.size());
    for (const auto& g : v.grades()) grades.push_back(fn(g));
    values.emplace_back(v.universe(), std::move(grades));
  }
  return {s.universe(), s.params(), std::move(values)};
}

inline std::size_t shared_count(const BipolarFuzzySoftSet& a, const BipolarFuzzySoftSet& b) {
  std::size_t n = 0;
  for (const auto& p : a.params())
    if (b.contains(p)) ++n;
  return n;
}

inline std::vector<Law> law_suite(std::function<BipolarGrade(const BipolarGrade&)> comp) {
  using O = LawOperand;
  const auto soft_comp = [comp](const BipolarFuzzySoftSet& s) { return map_grades(s, comp); };

  std::vector<Law> laws;
  const auto add = [&](std::string name, std::vector<O> ops,
                       std::function<std::optional<bool>(const LawTrial&)> check) {
    laws.push_back({std::move(name), std::move(ops), std::move(check)});
  };

  add("grade-complement-involution", {O::GradeA, O::GradeB, O::GradeC},
      [comp](const LawTrial& t) -> std::optional<bool> {
        for (const auto& g : {t.ga, t.gb, t.gc})
          if (!(comp(comp(g)) == g)) return false;
        return true;
      });

  add("grade-de-morgan", {O::GradeA, O::GradeB},
      [comp](const LawTrial& t) -> std::optional<bool> {
        return comp(grade_union(t.ga, t.gb)) ==
               grade_intersection(comp(t.ga), comp(t.gb));
      });

  add("grade-lattice-order-agreement", {O::GradeA, O::GradeB},
      [](const LawTrial& t) -> std::optional<bool> {
        const bool leq = grade_leq(t.ga, t.gb);
        return leq == (grade_intersection(t.ga, t.gb) == t.ga) &&
               leq == (grade_union(t.ga, t.gb) == t.gb);
      });

  add("soft-union-idempotent", {O::F}, [](const LawTrial& t) -> std::optional<bool> {
    return soft_equal(soft_extended_union(t.f, t.f), t.f);
  });

  add("soft-intersection-idempotent", {O::F}, [](const LawTrial& t) -> std::optional<bool> {
    if (t.f.empty()) return std::nullopt;
    return soft_equal(soft_restricted_intersection(t.f, t.f), t.f);
  });

  add("soft-null-union-identity", {O::F}, [](const LawTrial& t) -> std::optional<bool> {
    const auto null = null_soft_set(t.f.universe(), t.f.params());
    return soft_equal(soft_extended_union(t.f, null), t.f);
  });

  add("soft-null-intersection-absorbing", {O::F}, [](const LawTrial& t) -> std::optional<bool> {
    if (t.f.empty()) return std::nullopt;
    const auto null = null_soft_set(t.f.universe(), t.f.params());
    return soft_equal(soft_restricted_intersection(t.f, null), null);
  });

  add("soft-union-commutative", {O::F, O::G}, [](const LawTrial& t) -> std::optional<bool> {
    return soft_equal(soft_extended_union(t.f, t.g), soft_extended_union(t.g, t.f));
  });

  add("soft-intersection-commutative", {O::F, O::G}, [](const LawTrial& t) -> std::optional<bool> {
    if (shared_count(t.f, t.g) == 0) return std::nullopt;
    return soft_equal(soft_restricted_intersection(t.f, t.g),
                      soft_restricted_intersection(t.g, t.f));
  });

  add("soft-union-associative", {O::F, O::G, O::H}, [](const LawTrial& t) -> std::optional<bool> {
    return soft_equal(soft_extended_union(t.f, soft_extended_union(t.g, t.h)),
                      soft_extended_union(soft_extended_union(t.f, t.g), t.h));
  });

  add("soft-intersection-associative", {O::F, O::G, O::H},
      [](const LawTrial& t) -> std::optional<bool> {
        std::size_t common = 0;
        for (const auto& p : t.f.params())
          if (t.g.contains(p) && t.h.contains(p)) ++common;
        if (common == 0) return std::nullopt;
        return soft_equal(
            soft_restricted_intersection(t.f, soft_restricted_intersection(t.g, t.h)),
            soft_restricted_intersection(soft_restricted_intersection(t.f, t.g), t.h));
      });

  add("soft-intersection-distributes-over-union", {O::F, O::G, O::H},
      [](const LawTrial& t) -> std::optional<bool> {
        if (shared_count(t.f, t.g) == 0 || shared_count(t.f, t.h) == 0) return std::nullopt;
        return soft_equal(
            soft_restricted_intersection(t.f, soft_extended_union(t.g, t.h)),
            soft_extended_union(soft_restricted_intersection(t.f, t.g),
                                soft_restricted_intersection(t.f, t.h)));
      });

  add("soft-union-distributes-over-intersection", {O::F, O::G, O::H},
      [](const LawTrial& t) -> std::optional<bool> {
        if (shared_count(t.g, t.h) == 0) return std::nullopt;
        return soft_equal(
            soft_extended_union(t.f, soft_restricted_intersection(t.g, t.h)),
            soft_restricted_intersection(soft_extended_union(t.f, t.g),
                                         soft_extended_union(t.f, t.h)));
      });

  add("soft-absorption-union-over-intersection", {O::F, O::G},
      [](const LawTrial& t) -> std::optional<bool> {
        if (shared_count(t.f, t.g) == 0) return std::nullopt;
        return soft_equal(soft_extended_union(t.f, soft_restricted_intersection(t.f, t.g)), t.f);
      });

  add("soft-absorption-intersection-over-union", {O::F, O::G},
      [](const LawTrial& t) -> std::optional<bool> {
        if (t.f.empty()) return std::nullopt;
        return soft_equal(soft_restricted_intersection(t.f, soft_extended_union(t.f, t.g)), t.f);
      });

  add("soft-de-morgan-union", {O::F, O::G}, [soft_comp](const LawTrial& t) -> std::optional<bool> {
    return soft_equal(soft_comp(soft_extended_union(t.f, t.g)),
                      soft_extended_intersection(soft_comp(t.f), soft_comp(t.g)));
  });

  add("soft-de-morgan-intersection", {O::F, O::G},
      [soft_comp](const LawTrial& t) -> std::optional<bool> {
        return soft_equal(soft_comp(soft_extended_intersection(t.f, t.g)),
                          soft_extended_union(soft_comp(t.f), soft_comp(t.g)));
      });

  add("soft-complement-involution", {O::F}, [soft_comp](const LawTrial& t) -> std::optional<bool> {
    return soft_equal(soft_comp(soft_comp(t.f)), t.f);
  });

  add("soft-subset-intersection-collapse", {O::F, O::Sup},
      [](const LawTrial& t) -> std::optional<bool> {
        if (t.f.empty() || !soft_subset(t.f, t.sup)) return std::nullopt;
        return soft_equal(soft_restricted_intersection(t.f, t.sup), t.f);
      });

  add("soft-subset-union-collapse", {O::F, O::Sup},
      [](const LawTrial& t) -> std::optional<bool> {
        if (!soft_subset(t.f, t.sup)) return std::nullopt;
        return soft_equal(soft_extended_union(t.f, t.sup), t.sup);
      });

  add("soft-product-shape", {O::F, O::G}, [](const LawTrial& t) -> std::optional<bool> {
    const auto conj = soft_and(t.f, t.g);
    const auto disj = soft_or(t.f, t.g);
    if (conj.size() != t.f.size() * t.g.size()) return false;
    if (disj.size() != t.f.size() * t.g.size()) return false;
    for (std::size_t i = 0; i < t.f.size(); ++i)
      for (std::size_t j = 0; j < t.g.size(); ++j) {
        const auto name = ProductParameter{t.f.param(i), t.g.param(j)}.str();
        if (conj.param(i * t.g.size() + j) != name) return false;
      }
    const auto conj_ff = soft_and(t.f, t.f);
    const auto disj_ff = soft_or(t.f, t.f);
    for (std::size_t i = 0; i < t.f.size(); ++i) {
      const auto diag = ProductParameter{t.f.param(i), t.f.param(i)}.str();
      if (!(*conj_ff.find(diag) == t.f.value(i))) return false;
      if (!(*disj_ff.find(diag) == t.f.value(i))) return false;
    }
    return true;
  });

  return laws;
}

// Shrinking: drop universe objects and operand parameters while the law
// still fails, then serialize what remains.

inline BipolarFuzzySoftSet without_object(const BipolarFuzzySoftSet& s, const UniversePtr& u,
                                          std::size_t drop) {
  std::vector<BipolarFuzzySet> values;
  values.reserve(s.size());
  for (const auto& v : s.values()) {
    std::vector<BipolarGrade> grades;
    grades.reserve(u->size());
    for (std::size_t x = 0; x < v.size(); ++x)
      if (x != drop) grades.push_back(v.at(x));
    values.emplace_back(u, std::move(grades));
  }
  return {u, s.params(), std::move(values)};
}

inline BipolarFuzzySoftSet without_param(const BipolarFuzzySoftSet& s, std::size_t drop) {
  std::vector<std::string> params;
  std::vector<BipolarFuzzySet> values;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == drop) continue;
    params.push_back(s.param(i));
    values.push_back(s.value(i));
  }
  return {s.universe(), ParameterSet(std::move(params)), std::move(values)};
}

inline LawTrial drop_object(const LawTrial& t, std::size_t idx) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < t.f.universe()->size(); ++i)
    if (i != idx) objects.push_back(t.f.universe()->object(i));
  auto u = make_universe(std::move(objects));
  return {without_object(t.f, u, idx), without_object(t.g, u, idx), without_object(t.h, u, idx),
          without_object(t.sup, u, idx), t.ga, t.gb, t.gc};
}

inline LawTrial drop_param(const LawTrial& t, LawOperand which, std::size_t idx) {
  LawTrial out = t;
  switch (which) {
    case LawOperand::F: out.f = without_param(t.f, idx); break;
    case LawOperand::G: out.g = without_param(t.g, idx); break;
    case LawOperand::H: out.h = without_param(t.h, idx); break;
    case LawOperand::Sup: out.sup = without_param(t.sup, idx); break;
    default: break;
  }
  return out;
}

inline LawTrial minimize_failure(const Law& law, LawTrial trial) {
  const auto still_fails = [&](const LawTrial& t) {
    const auto r = law.check(t);
    return r.has_value() && !*r;
  };
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < trial.f.universe()->size(); ++i) {
      auto cand = drop_object(trial, i);
      if (still_fails(cand)) {
        trial = std::move(cand);
        improved = true;
        break;
      }
    }
    if (improved) continue;
    for (const auto op : law.operands) {
      if (!is_soft_operand(op)) continue;
      const auto& s = soft_operand(trial, op);
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto cand = drop_param(trial, op, i);
        if (still_fails(cand)) {
          trial = std::move(cand);
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
  }
  return trial;
}

inline std::string operand_name(LawOperand op) {
  switch (op) {
    case LawOperand::F: return "F";
    case LawOperand::G: return "G";
    case LawOperand::H: return "H";
    case LawOperand::Sup: return "S";
    case LawOperand::GradeA: return "a";
    case LawOperand::GradeB: return "b";
    default: return "c";
  }
}

inline std::string describe_operands(const Law& law, const LawTrial& t) {
  std::string out;
  for (const auto op : law.operands) {
    if (!out.empty()) out += "\n";
    out += "  " + operand_name(op) + " = ";
    if (is_soft_operand(op)) {
      out += dataset_json(soft_operand(t, op)).dump();
    } else if (op == LawOperand::GradeA) {
      out += t.ga.str();
    } else if (op == LawOperand::GradeB) {
      out += t.gb.str();
    } else {
      out += t.gc.str();
    }
  }
  return out;
}

}  // namespace detail

inline LawReport run_laws(const LawConfig& cfg) {
  if (cfg.trials < 1) throw ValidationError("laws: trials must be >= 1");
  if (cfg.max_objects < 1 || cfg.max_params < 1)
    throw ValidationError("laws: instance size bounds must be >= 1");

  std::function<BipolarGrade(const BipolarGrade&)> comp = cfg.complement_override;
  if (!comp) comp = [](const BipolarGrade& g) { return grade_complement(g); };

  const auto laws = detail::law_suite(comp);
  LawReport report;
  report.trials = cfg.trials;
  report.laws.reserve(laws.size());
  for (const auto& law : laws) report.laws.push_back({law.name, 0, 0, 0, {}});

  std::mt19937_64 rng(cfg.seed);
  for (long trial = 0; trial < cfg.trials; ++trial) {
    const auto t = detail::random_trial(rng, cfg);
    for (std::size_t i = 0; i < laws.size(); ++i) {
      const auto result = laws[i].check(t);
      if (!result) {
        ++report.laws[i].skipped;
      } else if (*result) {
        ++report.laws[i].passed;
      } else {
        ++report.laws[i].failed;
        if (report.laws[i].counterexample.empty()) {
          const auto minimized = detail::minimize_failure(laws[i], t);
          report.laws[i].counterexample = detail::describe_operands(laws[i], minimized);
        }
      }
    }
  }
  return report;
}

inline std::string format_law_report(const LawReport& report) {
  std::string out;
  for (const auto& law : report.laws)
    out += law.name + ": passed=" + std::to_string(law.passed) +
           " failed=" + std::to_string(law.failed) + " skipped=" + std::to_string(law.skipped) +
           "\n";
  for (const auto& law : report.laws)
    if (!law.counterexample.empty())
      out += "counterexample for " + law.name + ":\n" + law.counterexample + "\n";
  const long failures = report.total_failures();
  out += failures == 0 ? "result: PASS (" + std::to_string(report.trials) + " trials)\n"
                       : "result: FAIL (" + std::to_string(failures) + " violations)\n";
  return out;
}

}  // namespace bfss

#endif  // BFSS_LAWS_HPP
