#include "dolbeault/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <istream>
#include <thread>

#include "dolbeault/bott.hpp"

namespace dolbeault {

bool hypothesis_split_ample(const SplitBundleSpec& spec, Int k) {
  require(k >= 1, "ampleness test needs k >= 1");
  require(!spec.degrees.empty(), "split bundle needs at least one summand");
  const Int lowest = *std::min_element(spec.degrees.begin(), spec.degrees.end());
  return checked::add(checked::mul(k, lowest), spec.c) > 0;
}

namespace {

// Visits each multiset of `count` indices from [0, n) as a non-decreasing
// index sequence (strictly increasing when `distinct`).
template <typename Fn>
void for_each_index_choice(std::size_t n, std::size_t count, bool distinct,
                           std::vector<std::size_t>& chosen, Fn&& fn) {
  if (chosen.size() == count) {
    fn(chosen);
    return;
  }
  std::size_t start = chosen.empty() ? 0 : chosen.back() + (distinct ? 1 : 0);
  for (std::size_t i = start; i < n; ++i) {
    chosen.push_back(i);
    for_each_index_choice(n, count, distinct, chosen, fn);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Int> split_line_degrees(const SplitBundleSpec& spec, Int alpha,
                                    Int beta) {
  require(alpha >= 0 && beta >= 0, "alpha and beta must be non-negative");
  const std::size_t e = spec.degrees.size();
  std::vector<Int> sym_degrees;
  std::vector<std::size_t> chosen;
  for_each_index_choice(e, static_cast<std::size_t>(alpha), false, chosen,
                        [&](const auto& idx) {
                          Int s = 0;
                          for (auto i : idx) s += spec.degrees[i];
                          sym_degrees.push_back(s);
                        });
  std::vector<Int> out;
  if (beta > spec.rank()) return out;
  for_each_index_choice(e, static_cast<std::size_t>(beta), true, chosen,
                        [&](const auto& idx) {
                          Int s = spec.c;
                          for (auto i : idx) s += spec.degrees[i];
                          for (Int t : sym_degrees) out.push_back(s + t);
                        });
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Int, BigInt> split_cohomology(const SplitBundleSpec& spec, Int alpha,
                                       Int beta, Int p) {
  require(spec.m >= 1, "projective space dimension must be positive");
  require(p >= 0 && p <= spec.m, "p must lie in [0, m]");
  require(alpha > 0 || beta > 0, "alpha and beta cannot both be 0");
  std::map<Int, std::uint64_t> counts;
  for (Int t : split_line_degrees(spec, alpha, beta)) ++counts[t];
  std::map<Int, BigInt> out;
  for (const auto& [t, count] : counts)
    for (const auto& [q, dim] : pm_forms_cohomology(spec.m, p, t))
      out[q] += dim * count;
  return out;
}

std::string_view to_string(Predicate pred) {
  switch (pred) {
    case Predicate::Main: return "main";
    case Predicate::Wedge: return "wedge";
    case Predicate::Sym: return "sym";
    case Predicate::Corollary: return "corollary";
  }
  return "?";
}

Predicate predicate_from_string(std::string_view name) {
  for (auto pred : {Predicate::Main, Predicate::Wedge, Predicate::Sym,
                    Predicate::Corollary})
    if (to_string(pred) == name) return pred;
  throw ConfigError("unknown predicate '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Int parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("line " + std::to_string(line) + ": expected an integer, got '" +
                      std::string(s) + "'");
  return value;
}

IntRange parse_range(std::string_view s, std::size_t line) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const Int v = parse_int(s, line);
    return {v, v};
  }
  IntRange r{parse_int(s.substr(0, dots), line), parse_int(s.substr(dots + 2), line)};
  if (r.lo > r.hi)
    throw ConfigError("line " + std::to_string(line) + ": empty range");
  return r;
}

}  // namespace

SweepBox parse_sweep_box(std::istream& in) {
  SweepBox box;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "m") box.m = parse_range(value, line_no);
    else if (key == "e") box.e = parse_range(value, line_no);
    else if (key == "degree") box.degree = parse_range(value, line_no);
    else if (key == "c") box.c = parse_range(value, line_no);
    else if (key == "alpha") box.alpha = parse_range(value, line_no);
    else if (key == "beta") box.beta = parse_range(value, line_no);
    else if (key == "weight") box.max_weight = parse_int(value, line_no);
    else if (key == "p") box.p = parse_range(value, line_no);
    else if (key == "q") box.q = parse_range(value, line_no);
    else if (key == "threads") box.threads = static_cast<unsigned>(parse_int(value, line_no));
    else if (key == "predicates") {
      box.predicates.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        box.predicates.push_back(predicate_from_string(trim(rest.substr(0, comma))));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (box.m.lo < 1) throw ConfigError("m must be at least 1");
  if (box.e.lo < 1) throw ConfigError("e must be at least 1");
  if (box.alpha.lo < 0 || box.beta.lo < 0) throw ConfigError("alpha, beta must be non-negative");
  return box;
}

VanishingQuery SweepCase::query() const {
  return {spec.m, p, q, spec.rank(), alpha, beta, std::nullopt};
}

bool predicate_applies(Predicate pred, Int alpha, Int beta) {
  if (alpha == 0 && beta == 0) return false;
  switch (pred) {
    case Predicate::Main:
    case Predicate::Corollary: return true;
    case Predicate::Wedge: return alpha == 0;
    case Predicate::Sym: return beta == 0;
  }
  return false;
}

VanishingVerdict evaluate(Predicate pred, const VanishingQuery& query) {
  switch (pred) {
    case Predicate::Main: return vanish_main(query);
    case Predicate::Wedge: return vanish_wedge(query);
    case Predicate::Sym: return vanish_sym(query);
    case Predicate::Corollary: return vanish_sym_wedge_corollary(query);
  }
  throw DomainError("unknown predicate");
}

namespace {

void enumerate_degrees(const SweepBox& box, Int e, std::vector<Int>& prefix,
                       std::vector<std::vector<Int>>& out) {
  if (static_cast<Int>(prefix.size()) == e) {
    out.push_back(prefix);
    return;
  }
  const Int start = prefix.empty() ? box.degree.lo : prefix.back();
  for (Int d = start; d <= box.degree.hi; ++d) {
    prefix.push_back(d);
    enumerate_degrees(box, e, prefix, out);
    prefix.pop_back();
  }
}

IntRange clamp(const std::optional<IntRange>& r, Int m) {
  if (!r) return {0, m};
  return {std::max<Int>(r->lo, 0), std::min(r->hi, m)};
}

SweepReport sweep_bundle(const SweepBox& box, const SplitBundleSpec& spec) {
  SweepReport report;
  const IntRange pr = clamp(box.p, spec.m);
  const IntRange qr = clamp(box.q, spec.m);
  for (Int alpha = box.alpha.lo; alpha <= box.alpha.hi; ++alpha) {
    for (Int beta = box.beta.lo; beta <= box.beta.hi; ++beta) {
      if (alpha + beta == 0 || alpha + beta > box.max_weight) continue;
      if (beta > spec.rank()) continue;
      if (!hypothesis_split_ample(spec, alpha + beta)) continue;
      for (Int p = pr.lo; p <= pr.hi; ++p) {
        const auto coh = split_cohomology(spec, alpha, beta, p);
        for (Int q = qr.lo; q <= qr.hi; ++q) {
          ++report.cases_checked;
          SweepCase where{spec, alpha, beta, p, q};
          const auto it = coh.find(q);
          const BigInt h = it == coh.end() ? BigInt(0) : it->second;
          for (Predicate pred : box.predicates) {
            if (!predicate_applies(pred, alpha, beta)) continue;
            const VanishingVerdict v = evaluate(pred, where.query());
            if (h == 0) continue;
            if (v.vanishes) report.violations.push_back({where, pred, v, h});
            else if (v.excess == 0) report.boundary_witnesses.push_back({where, pred, h});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace

SweepReport sweep_validate(const SweepBox& box) {
  std::vector<SplitBundleSpec> specs;
  for (Int m = box.m.lo; m <= box.m.hi; ++m) {
    for (Int e = box.e.lo; e <= box.e.hi; ++e) {
      std::vector<std::vector<Int>> degree_lists;
      std::vector<Int> prefix;
      enumerate_degrees(box, e, prefix, degree_lists);
      for (const auto& degrees : degree_lists)
        for (Int c = box.c.lo; c <= box.c.hi; ++c) specs.push_back({m, degrees, c});
    }
  }

  std::vector<SweepReport> partial(specs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(specs.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        partial[i] = sweep_bundle(box, specs[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  unsigned threads = box.threads ? box.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 64);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  SweepReport report;
  for (auto& part : partial) {
    report.cases_checked += part.cases_checked;
    std::move(part.violations.begin(), part.violations.end(),
              std::back_inserter(report.violations));
    std::move(part.boundary_witnesses.begin(), part.boundary_witnesses.end(),
              std::back_inserter(report.boundary_witnesses));
  }
  return report;
}

OptimalityReport optimality_reproduce(Int r, Int f) {
  const BottResult bott = bott_cohomology(optimality_input(r, f));
  const Int n = checked::mul(f, r);
  const VanishingVerdict verdict = vanish_main({n, n, n - f, r, f - 1, 1, std::nullopt});
  OptimalityReport out;
  out.verdict_excess = verdict.excess;
  if (bott.nonzero) {
    out.bott_nonzero = true;
    out.bott_degree = bott.nonzero->degree;
    out.bott_dim = bott.nonzero->dim;
  }
  return out;
}

}  // namespace dolbeault
