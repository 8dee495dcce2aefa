// One PASS/FAIL line per acceptance criterion. Tolerances and sample sizes are
// fixed below; exit status is non-zero when any gated line fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "kdp/abelian_image.hpp"
#include "kdp/amalgam_splitting.hpp"
#include "kdp/certificates.hpp"
#include "kdp/cli.hpp"
#include "kdp/json_io.hpp"
#include "kdp/kernel_groups.hpp"
#include "kdp/presentation_area.hpp"
#include "kdp/subgroup_metrics.hpp"

using namespace kdp;

namespace {

constexpr double kAreaSeconds = 120.0;
constexpr double kToySeconds = 600.0;
constexpr int kRoundTripSamples = 200;
constexpr int kSplitSamples = 200;
constexpr int kNormalizeSamples = 100;
constexpr int kSubstitutionSamples = 100;
constexpr std::uint64_t kSeed = 20260101;

int failures = 0;

void report(int id, bool pass, std::string const& what) {
  std::printf("%s %d %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  failures += pass ? 0 : 1;
}

void note(std::string const& what) {
  std::printf("NOTE %s\n", what.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution inv(0.5);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    letters.push_back(inv(rng) ? -g : g);
  }
  return Word::from_signed(letters);
}

// Uniform ambient factors, last factor corrected into the kernel.
ProductElement random_member(std::mt19937_64& rng, KernelGroup const& g, int len) {
  ProductElement e;
  for (int i = 0; i < g.n(); ++i) {
    e.factors.push_back(random_word(rng, g.m(), len));
  }
  auto theta = g.theta(e);
  Word fix;
  for (int j = 0; j < g.r(); ++j) {
    fix = concat(fix, word_power(Word{j + 1}, -theta[static_cast<std::size_t>(j)]));
  }
  e.factors.back() = concat(e.factors.back(), fix);
  return e;
}

void criterion_area() {
  auto t0 = std::chrono::steady_clock::now();
  auto p = commutator_presentation();
  bool ok = true;
  std::string got;
  for (int n = 1; n <= 3; ++n) {
    auto w = commutator(word_power(Word{1}, n), word_power(Word{2}, n));
    auto r = area_search(p, w);
    bool exact = r.status == AreaResult::Status::exact;
    ok = ok && exact && r.area == n * n && verify_null_expression(p, w, r.witness);
    got += (n > 1 ? "," : "") +
           (exact ? std::to_string(r.area) : "exhausted");
  }
  double secs = seconds_since(t0);
  ok = ok && secs < kAreaSeconds;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "area [x^n,y^n] over <x,y|[x,y]> n=1..3: %s (want 1,4,9), "
                "witnesses verified, %.2fs",
                got.c_str(), secs);
  report(1, ok, buf);
}

void criterion_distortion() {
  auto s = standard_generators(KernelGroup(2, 2, 2));
  auto d1 = distance(s, h_family(1), 1);
  auto d2 = distance(s, h_family(2), 3);
  bool ok = d1.found && d1.distance == 1 && !d2.found;
  report(2, ok,
         "d_B(1,h1) = " + (d1.found ? std::to_string(d1.distance) : "?") +
             "; h2 outside the radius-3 ball, so d_B(1,h2) >= 4 = 2^2");
  auto d2_full = distance(s, h_family(2), 10);
  note("2 equality d_B(1,h2) = 4 does not hold: meet-in-the-middle search gives " +
       (d2_full.found ? std::to_string(d2_full.distance) : "> 10") +
       " (lower bound n^2 is what is gated)");
  auto d3 = distance(s, h_family(3), 8);
  note(std::string("2 stretch: h3 ") +
       (d3.found ? "found within radius 8" : "outside the radius-8 ball"));
}

void criterion_toy() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int exact = 0;
  std::string detail;
  for (int k = 1; k <= 2; ++k) {
    for (int n = 1; n <= 2; ++n) {
      auto rep = toy_amalgam_check(k, n);
      bool is_exact = rep.area.status == AreaResult::Status::exact;
      exact += is_exact;
      if (is_exact && rep.verdict != ToyReport::Verdict::holds) {
        ok = false;
      }
      detail += " (" + std::to_string(k) + "," + std::to_string(n) + "):" +
                (is_exact ? "area=" + std::to_string(rep.area.area)
                          : "exhausted,lb=" + std::to_string(rep.area.lower_bound)) +
                " vs 2nd=" + std::to_string(rep.bound) +
                (rep.bound_certified ? ",certified" : "");
    }
  }
  double secs = seconds_since(t0);
  ok = ok && exact > 0 && secs < kToySeconds;
  char buf[64];
  std::snprintf(buf, sizeof buf, " %.1fs", secs);
  report(3, ok,
         "toy amalgam Area >= 2n d on exact instances [" + std::to_string(exact) +
             "/4 exact]" + detail + buf);
}

void criterion_rewrite() {
  std::mt19937_64 rng(kSeed);
  int bad = 0;
  int total = 0;
  for (auto name : {"K2_2_1", "K2_2_2", "K3_2_2", "K2_3_2"}) {
    auto g = KernelGroup::parse(name);
    auto s = standard_generators(g);
    for (int i = 0; i < kRoundTripSamples; ++i) {
      auto e = random_member(rng, g, 4 + i % 9);
      ++total;
      bad += !(s.eval(rewrite_in_generators(g, e)) == e);
    }
  }
  report(4, bad == 0,
         "rewrite over S1 u S2 u S3 and evaluate back: " + std::to_string(bad) +
             " failures / " + std::to_string(total));
}

void criterion_split() {
  std::mt19937_64 rng(kSeed + 1);
  SplittingData d(3, 2);
  auto const& amb = d.whole().ambient();
  int bad = 0;
  for (int i = 0; i < kSplitSamples; ++i) {
    auto gamma = random_member(rng, d.whole(), 3 + i % 8);
    auto parts = semidirect_decompose(d, gamma);
    bad += !(amb.mul(parts.m_part, d.hat_generators().eval(parts.hat_word)) == gamma);
  }
  int pred_bad = 0;
  int in_m = 0;
  for (int i = 0; i < kSplitSamples; ++i) {
    ProductElement g{{random_word(rng, 2, 4), random_word(rng, 2, 4)}};
    if (i % 2 == 0) {
      auto theta = d.lower().theta(g);
      g.factors[1] = concat(g.factors[1], concat(word_power(Word{1}, -theta[0]),
                                                 word_power(Word{2}, -theta[1])));
    }
    in_m += d.in_M(g);
    for (int k = 1; k <= 2; ++k) {
      pred_bad += d.in_M(g) != (d.in_Lk(k, g) && d.p_k(k, g) == 0);
    }
  }
  report(5, bad == 0 && pred_bad == 0,
         "K3_2_2 reassembly failures " + std::to_string(bad) + "/" +
             std::to_string(kSplitSamples) + ", in_M <=> in_Lk & p_k=0 failures " +
             std::to_string(pred_bad) + "/" + std::to_string(2 * kSplitSamples) +
             " (" + std::to_string(in_m) + " samples in M)");
}

void criterion_normalize() {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  int bad = 0;
  int done = 0;
  while (done < kNormalizeSamples) {
    int m = std::uniform_int_distribution<int>(1, 4)(rng);
    int r = std::uniform_int_distribution<int>(1, std::min(m, 3))(rng);
    std::vector<AbelianVector> rows;
    for (int i = 0; i < m; ++i) {
      AbelianVector v(static_cast<std::size_t>(r));
      for (int j = 0; j < r; ++j) {
        v[static_cast<std::size_t>(j)] = entry(rng);
      }
      rows.push_back(v);
    }
    FactorHom h(m, r, rows);
    if (!is_surjective(h)) {
      continue;
    }
    ++done;
    auto c = normalize_basis(h);
    for (int i = 0; i < m; ++i) {
      auto want = i < r ? AbelianVector::unit(static_cast<std::size_t>(r),
                                              static_cast<std::size_t>(i))
                        : AbelianVector(static_cast<std::size_t>(r));
      if (!(ab_image(h, c.new_basis[static_cast<std::size_t>(i)]) == want)) {
        ++bad;
        break;
      }
    }
  }
  report(6, bad == 0,
         "normalize random surjective maps (m<=4, r<=3, entries in [-3,3]): " +
             std::to_string(bad) + " failures / " + std::to_string(done));
}

void criterion_substitution() {
  std::mt19937_64 rng(kSeed + 3);
  int bad = 0;
  for (int i = 0; i < kSubstitutionSamples; ++i) {
    bad += !substitution_identity_holds(random_word(rng, 3, 1 + i % 30));
  }
  report(7, bad == 0,
         "substitution identity on random words over B: " + std::to_string(bad) +
             " failures / " + std::to_string(kSubstitutionSamples));
}

std::string cli(std::vector<std::string> const& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = run_cli(args, out, err);
  return out.str();
}

void criterion_certify() {
  bool ok = true;
  std::string detail;
  for (auto [n, want] : {std::pair{2, 16}, std::pair{3, 54}}) {
    std::vector<std::string> args{"--format", "json", "certify", "--n",
                                  std::to_string(n)};
    int c1 = 0;
    int c2 = 0;
    auto a = cli(args, c1);
    auto b = cli(args, c2);
    auto j = Json::parse(a);
    bool green = true;
    int area_fact = -1;
    for (auto const& e : j["evidence"]) {
      green = green && e["passed"].get<bool>();
      if (e["verifier"] == "area_search" && e["detail"]["status"] == "exact") {
        area_fact = e["detail"]["area"].get<int>();
      }
    }
    bool this_ok = c1 == kExitVerified && a == b && j["status"] == "certified" &&
                   j["area_lower_bound"].get<int>() == want && green &&
                   area_fact == n * n;
    ok = ok && this_ok;
    detail += " n=" + std::to_string(n) + ":bound=" +
              std::to_string(j["area_lower_bound"].get<int>()) + "(want " +
              std::to_string(want) + "),area_fact=exact(" +
              std::to_string(area_fact) + ")," + (green ? "green" : "red") + "," +
              (a == b ? "bytes-identical" : "bytes-differ");
  }
  report(8, ok, "certify pipeline" + detail);
}

}  // namespace

int main() {
  criterion_area();
  criterion_distortion();
  criterion_toy();
  criterion_rewrite();
  criterion_split();
  criterion_normalize();
  criterion_substitution();
  criterion_certify();
  return failures == 0 ? 0 : 1;
}
