#include "posalg/repro.hpp"

#include <array>

#include "posalg/idempot.hpp"
#include "posalg/lattice.hpp"
#include "posalg/spanalg.hpp"

namespace posalg {

Json to_json(const ReproRow& row) {
  Json j;
  j["claim_id"] = row.claim_id;
  j["expected"] = rat_to_json(row.expected);
  j["computed"] = rat_to_json(row.computed);
  j["pass"] = row.pass;
  j["source"] = row.source;
  return j;
}

namespace {

class Suite {
 public:
  void add(std::string id, const Rat& expected, const Rat& computed, std::string source) {
    rows_.push_back(ReproRow{std::move(id), expected, computed, expected == computed, std::move(source)});
  }
  void flag(std::string id, bool computed, std::string source) {
    add(std::move(id), Rat(1), Rat(computed ? 1 : 0), std::move(source));
  }
  std::vector<ReproRow> take() { return std::move(rows_); }

 private:
  std::vector<ReproRow> rows_;
};

std::size_t unital_dim(const Mat& e, const Mat& f) {
  const std::array<Mat, 2> gens{e, f};
  return algebra_closure(gens, true).dim();
}

bool band_split_clean(const Mat& e) {
  try {
    const BandSplit s = band_split(e);
    return band_identity_violations(e, s).empty();
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<Mat> upper_triangular_units(std::size_t n) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back(Mat::unit(n, i, j));
  return out;
}

bool same_span(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::vector<Mat> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rref(both).rank;
  return r == rref(a).rank && r == rref(b).rank;
}

Mat decreasing_diagonal(std::size_t n) {
  std::vector<Rat> d;
  for (std::size_t i = 0; i < n; ++i) d.emplace_back(static_cast<long>(n - i));
  return Mat::diagonal(d);
}

}  // namespace

std::vector<ReproRow> repro_all(Exec exec) {
  Suite s;

  {
    const auto [e, f] = ks7_pair();
    const IdempotentPair pair{e, f, classify_order(e, f)};
    s.flag("ks7_idempotent", e * e == e && f * f == f, "7x7 pair: both matrices are idempotent");
    s.flag("ks7_order", pair.order == Order::ef_ge_fe, "7x7 pair: EF >= FE entrywise");
    std::vector<Mat> words;
    const std::array<Mat, 2> gens{e, f};
    for (const auto& w : nine_words()) words.push_back(evaluate(w, gens, 7));
    s.add("ks7_nine_word_rank", 9, static_cast<long>(rref(words).rank), "7x7 pair: the nine words are independent");
    const Report nine = nine_word_span(pair);
    s.add("ks7_dim", 9, static_cast<long>(nine.dim.value_or(0)), "7x7 pair attains the nine-dimensional bound");
    s.flag("ks7_identities", nine.details["EFEFE_eq_EFE"].get<bool>() && nine.details["FEFEF_eq_FEF"].get<bool>(),
           "(EF)^2 E = EFE and (FE)^2 F = FEF for a comparable pair");
    s.flag("ks7_ideal_triangularizable", ideal_triangularizable(gens).has_value(),
           "7x7 pair is ideal-triangularizable");
    s.flag("ks7_band_split_E", band_split_clean(e), "four-band block identities for E");
    s.flag("ks7_band_split_F", band_split_clean(f), "four-band block identities for F");
  }
  {
    const auto [e, f] = ks6_pair();
    s.add("ks6_dim", 7, static_cast<long>(unital_dim(e, f)), "6x6 truncation attains dimension 7");
    const Report band = band_semigroup(IdempotentPair{e, f, classify_order(e, f)});
    s.flag("ks6_semigroup_six", band.details["equals_six_words"].get<bool>(),
           "6x6 truncation: semigroup is {E,F,EF,FE,EFE,FEF}");
  }
  {
    const auto [e, f] = n2_pair();
    s.add("n2_dim", 4, static_cast<long>(unital_dim(e, f)), "2x2 pair generates all 2x2 matrices");
    s.flag("n2_EF_eq_2E11", e * f == Rat(2) * Mat::unit(2, 0, 0), "2x2 pair: EF = 2 E_11");
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto [e, f] = even_pair(k);
    s.add("even_k" + std::to_string(k) + "_dim", static_cast<long>(4 * k), static_cast<long>(unital_dim(e, f)),
          "even family: dimension 2n");
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    const Report r = independence_system_check(k);
    s.add("even_indep_k" + std::to_string(k), static_cast<long>(4 * k),
          r.details["closed_forms"].get<bool>() ? r.details["rank"].get<long>() : -1L,
          "even family: C^{2j}, C^{2j+1}, C^{2j}E, C^{2j+1}E independent with the stated closed forms");
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto [e, f] = odd_pair(k);
    s.add("odd_k" + std::to_string(k) + "_dim", static_cast<long>(4 * k + 1), static_cast<long>(unital_dim(e, f)),
          "odd family: dimension 2n - 1");
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const ConeSpan span = cone_span(supercomm_spec(decreasing_diagonal(n), Side::left), exec);
    const std::string id = "diag_span_n" + std::to_string(n);
    s.add(id, static_cast<long>(n * (n + 1) / 2), static_cast<long>(span.dim),
          "super left-commutant of a decreasing diagonal spans n(n+1)/2");
    s.flag("diag_upper_n" + std::to_string(n), same_span(span.span_basis, upper_triangular_units(n)),
           "super left-commutant of a decreasing diagonal spans the upper triangular matrices");
  }
  {
    const std::size_t n = 4;
    const Mat a = decreasing_diagonal(n);
    const std::array<Mat, 2> gens{a, Mat::jordan(n)};
    const AlgebraBasis alg = algebra_closure(gens, false);
    s.flag("diag_jordan_alg_n4", same_span(alg.basis, upper_triangular_units(n)),
           "decreasing diagonal and the Jordan block generate the upper triangular matrices");
    const std::vector<Rat> shuffled{Rat(2), Rat(4), Rat(1), Rat(3)};
    const ConeSpan span = cone_span(supercomm_spec(Mat::diagonal(shuffled), Side::left), exec);
    s.add("perm_diag_span_n4", 10, static_cast<long>(span.dim),
          "distinct positive diagonal: span dimension n(n+1)/2");
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    const ConeSpan span = cone_span(supercomm_spec(Mat::ones(n), Side::left), exec);
    s.add("ds_span_n" + std::to_string(n), static_cast<long>((n - 1) * (n - 1) + 1), static_cast<long>(span.dim),
          "super left-commutant of ee^T: doubly stochastic multiples span (n-1)^2 + 1");
    if (n == 3) s.flag("ds_lin_eq_alg_n3", verify_lin_eq_alg(span).pass, "span of a super left-commutant is an algebra");
    if (n >= 3) {
      s.add("ds_nontri_n" + std::to_string(n), 0, is_triangularizable(span.span_basis, n).pass ? 1 : 0,
            "super left-commutant of ee^T is not triangularizable for n >= 3");
    }
  }
  return s.take();
}

}  // namespace posalg
