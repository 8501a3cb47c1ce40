#include "posalg/idempot.hpp"

#include <algorithm>
#include <array>
#include <regex>

#include "posalg/errors.hpp"
#include "posalg/lattice.hpp"
#include "posalg/linalg.hpp"
#include "posalg/poly.hpp"

namespace posalg {

std::string to_string(Order order) {
  switch (order) {
    case Order::ef_ge_fe: return "EF>=FE";
    case Order::ef_le_fe: return "EF<=FE";
    case Order::equal: return "EF=FE";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

Order classify_order(const Mat& e, const Mat& f) {
  const Mat ef = e * f;
  const Mat fe = f * e;
  const bool ge = entrywise_ge(ef, fe);
  const bool le = entrywise_ge(fe, ef);
  if (ge && le) return Order::equal;
  if (ge) return Order::ef_ge_fe;
  if (le) return Order::ef_le_fe;
  return Order::incomparable;
}

void require_positive_idempotent(const Mat& e, const char* what) {
  require_square(e, what);
  require_nonnegative(e, what);
  const Mat sq = e * e;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) {
      if (sq(i, j) != e(i, j)) {
        throw DomainError(std::string(what) + ": not idempotent, (M^2)(" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") = " + to_string(sq(i, j)) + " but M(" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + to_string(e(i, j)));
      }
    }
  }
}

IdempotentPair validate_pair(const Mat& e, const Mat& f) {
  require_same_shape(e, f, "idempotent pair");
  require_positive_idempotent(e, "E");
  require_positive_idempotent(f, "F");
  return IdempotentPair{e, f, classify_order(e, f)};
}

std::span<const std::string> pair_names() {
  static const std::array<std::string, 2> names{"E", "F"};
  return names;
}

namespace {

std::vector<Word> parse_words(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(parse_word(t, pair_names()));
  return out;
}

Order require_comparable(const IdempotentPair& pair, const char* what) {
  if (!pair.comparable()) throw DomainError(std::string(what) + ": EF and FE are incomparable");
  return pair.order;
}

Order require_order(const Mat& e, const Mat& a, const char* what) {
  const Mat ae = a * e;
  const Mat ea = e * a;
  if (entrywise_ge(ae, ea)) return Order::ef_ge_fe;  // AE >= EA
  if (entrywise_ge(ea, ae)) return Order::ef_le_fe;
  throw DomainError(std::string(what) + ": neither AE >= EA nor AE <= EA");
}

}  // namespace

std::vector<Word> nine_words() { return parse_words({"1", "E", "F", "EF", "FE", "EFE", "FEF", "EFEF", "FEFE"}); }

std::vector<Word> six_words() { return parse_words({"E", "F", "EF", "FE", "EFE", "FEF"}); }

Report check_one_idem(const Mat& e, const Mat& a) {
  require_positive_idempotent(e, "E");
  require_same_shape(e, a, "check_one_idem");
  const Order order = require_order(e, a, "check_one_idem");

  const bool strictly = null_ideal(e).empty();
  const bool full_range = range_ideal(e).full();
  const Mat ae = a * e;
  const Mat ea = e * a;
  const Mat eae = ea * e;
  const Mat c = ae - ea;
  const bool c_sq_zero = (c * c).is_zero();

  Report rep;
  rep.check = "one_idem";
  rep.pass = true;
  rep.details["order"] = order == Order::ef_ge_fe ? "AE>=EA" : "AE<=EA";
  rep.details["strictly_positive"] = strictly;
  rep.details["full_range"] = full_range;
  Json applied = Json::array();
  auto conclude = [&](const char* part, bool holds, const char* what) {
    applied.push_back(part);
    rep.details[part] = holds;
    if (!holds && rep.pass) {
      rep.pass = false;
      rep.witness = std::string("(") + part + ") " + what + " fails";
    }
  };
  if (strictly) conclude("a", ae == eae && c_sq_zero, "AE = EAE, (AE-EA)^2 = 0");
  if (full_range) conclude("b", ea == eae && c_sq_zero, "EA = EAE, (AE-EA)^2 = 0");
  if (strictly && full_range) conclude("c", ae == ea, "AE = EA");
  rep.details["applied"] = std::move(applied);
  return rep;
}

Report check_two_idem(const IdempotentPair& pair) {
  require_comparable(pair, "check_two_idem");
  const bool strictly = null_ideal(pair.e).empty();
  const bool full_range = range_ideal(pair.e).full();
  const std::array<Mat, 2> gens{pair.e, pair.f};

  Report rep;
  rep.check = "two_idem";
  rep.pass = true;
  rep.details["strictly_positive"] = strictly;
  rep.details["full_range"] = full_range;
  Json applied = Json::array();
  if (strictly || full_range) {
    const Report r = spanning_word_check(gens, parse_words({"1", "E", "F", "EF", "FE", "FEF"}), pair_names());
    applied.push_back("i");
    rep.details["i"] = r.pass;
    rep.dim = r.dim;
    if (!r.pass) {
      rep.pass = false;
      rep.witness = "(i) " + r.witness;
    }
  }
  if (strictly && full_range) {
    const Report r = spanning_word_check(gens, parse_words({"1", "E", "F", "EF"}), pair_names());
    applied.push_back("ii");
    rep.details["ii"] = r.pass;
    if (!r.pass && rep.pass) {
      rep.pass = false;
      rep.witness = "(ii) " + r.witness;
    }
  }
  if (!rep.dim) rep.dim = algebra_closure(gens, true).dim();
  rep.details["applied"] = std::move(applied);
  return rep;
}

Report check_key_identity(const Mat& e, const Mat& a) {
  require_positive_idempotent(e, "E");
  require_same_shape(e, a, "check_key_identity");
  require_nonnegative(a, "A");
  const Order order = require_order(e, a, "check_key_identity");

  const Mat c = a * e - e * a;
  const Mat c2 = c * c;
  const Mat ea = e * a;
  const bool right = (c2 * e).is_zero();
  const bool left = (e * c2).is_zero();
  const bool identity = ea * ea * e == ea * a * e;

  Report rep;
  rep.check = "key_identity";
  rep.pass = right && left && identity;
  rep.details["order"] = order == Order::ef_ge_fe ? "AE>=EA" : "AE<=EA";
  rep.details["commutator_sq_E_zero"] = right;
  rep.details["E_commutator_sq_zero"] = left;
  rep.details["EAEAE_eq_EAAE"] = identity;
  rep.details["band_split"] = to_json(band_split(e));
  if (!right) rep.witness = "(AE-EA)^2 E != 0";
  else if (!left) rep.witness = "E (AE-EA)^2 != 0";
  else if (!identity) rep.witness = "(EA)^2 E != E A^2 E";
  return rep;
}

Report nine_word_span(const IdempotentPair& pair) {
  require_comparable(pair, "nine_word_span");
  const std::array<Mat, 2> gens{pair.e, pair.f};
  Report rep = spanning_word_check(gens, nine_words(), pair_names());
  rep.check = "nine_word_span";

  const Mat& e = pair.e;
  const Mat& f = pair.f;
  const Mat ef = e * f;
  const Mat fe = f * e;
  const bool efe = ef * ef * e == ef * e;
  const bool fef = fe * fe * f == fe * f;
  rep.details["order"] = to_string(pair.order);
  rep.details["EFEFE_eq_EFE"] = efe;
  rep.details["FEFEF_eq_FEF"] = fef;
  const bool spans = rep.pass;
  rep.pass = spans && efe && fef && rep.dim.value_or(0) <= 9;
  if (spans && !efe) rep.witness = "(EF)^2 E != EFE";
  else if (spans && !fef) rep.witness = "(FE)^2 F != FEF";
  return rep;
}

Report band_semigroup(const IdempotentPair& pair) {
  require_comparable(pair, "band_semigroup");
  const std::size_t n = pair.e.rows();
  const std::array<Mat, 2> gens{pair.e, pair.f};
  const std::size_t cap = std::max<std::size_t>(n * n, 16);

  std::vector<Mat> elements;
  std::vector<Word> words;
  auto offer = [&](Mat m, Word w) {
    for (const auto& x : elements) {
      if (x == m) return;
    }
    elements.push_back(std::move(m));
    words.push_back(std::move(w));
  };
  offer(pair.e, Word{{0}});
  offer(pair.f, Word{{1}});
  bool stabilized = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements.size() > cap) {
      stabilized = false;
      break;
    }
    for (std::size_t g = 0; g < 2; ++g) {
      Word w = words[i];
      w.letters.push_back(g);
      offer(elements[i] * gens[g], std::move(w));
    }
  }

  Json listed = Json::array();
  Json idempotent = Json::array();
  bool all_idempotent = stabilized;
  std::string first_non_idempotent;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const bool idem = elements[i] * elements[i] == elements[i];
    listed.push_back(to_string(words[i], pair_names()));
    idempotent.push_back(idem);
    if (!idem && all_idempotent) {
      all_idempotent = false;
      first_non_idempotent = to_string(words[i], pair_names());
    }
  }

  // Set equality with the six listed words.
  std::vector<Mat> six;
  for (const auto& w : six_words()) six.push_back(evaluate(w, gens, n));
  auto in = [](const std::vector<Mat>& set, const Mat& m) {
    return std::find(set.begin(), set.end(), m) != set.end();
  };
  bool equals_six = stabilized;
  for (const auto& m : six) equals_six = equals_six && in(elements, m);
  for (const auto& m : elements) equals_six = equals_six && in(six, m);

  Report rep;
  rep.check = "band_semigroup";
  rep.dim = algebra_closure(gens, true).dim();
  rep.details["stabilized"] = stabilized;
  rep.details["cardinality"] = elements.size();
  rep.details["elements"] = std::move(listed);
  rep.details["idempotent"] = std::move(idempotent);
  rep.details["is_band"] = all_idempotent;
  rep.details["equals_six_words"] = equals_six;
  if (!all_idempotent) {
    // Hypothesis not met; nothing to assert.
    rep.pass = true;
    rep.witness = stabilized ? first_non_idempotent + " is not idempotent" : "semigroup did not stabilize";
  } else {
    rep.pass = equals_six && *rep.dim <= 7;
    if (!equals_six) rep.witness = "semigroup differs from {E,F,EF,FE,EFE,FEF}";
    else if (!rep.pass) rep.witness = "unital algebra dimension exceeds 7";
  }
  return rep;
}

std::pair<Mat, Mat> ks7_pair() {
  Mat e = Mat::from_ints({{0, 0, 0, 1, 0, 0, 0},
                          {0, 1, 0, 0, 0, 0, 0},
                          {0, 0, 0, 1, 0, 0, 0},
                          {0, 0, 0, 1, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 1, 0},
                          {0, 0, 0, 0, 0, 0, 0}});
  Mat f = Mat::from_ints({{0, 0, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 1, 0, 0},
                          {0, 0, 1, 0, 0, 0, 0},
                          {0, 0, 0, 1, 0, 1, 1},
                          {0, 0, 0, 0, 1, 0, 0},
                          {0, 0, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0, 0}});
  return {std::move(e), std::move(f)};
}

std::pair<Mat, Mat> ks6_pair() {
  const auto [e, f] = ks7_pair();
  const std::vector<std::size_t> keep{0, 1, 2, 3, 4, 5};
  return {e.block(keep, keep), f.block(keep, keep)};
}

std::pair<Mat, Mat> n2_pair() { return {Mat::from_ints({{1, 1}, {0, 0}}), Mat::from_ints({{1, 0}, {1, 0}})}; }

Mat cycle_permutation(std::size_t k) {
  Mat p(k, k);
  if (k == 0) return p;
  p(0, k - 1) = 1;
  for (std::size_t i = 1; i < k; ++i) p(i, i - 1) = 1;
  return p;
}

std::pair<Mat, Mat> even_pair(std::size_t k) {
  if (k == 0) throw DomainError("even(k) requires k >= 1");
  if (k == 1) return n2_pair();
  const Mat p = cycle_permutation(k);
  Mat e(2 * k, 2 * k);
  Mat f(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    e(i, i) = 1;
    e(i, k + i) = 2;
    f(i, i) = 1;
    for (std::size_t j = 0; j < k; ++j) f(k + i, j) = p(i, j);
  }
  return {std::move(e), std::move(f)};
}

std::pair<Mat, Mat> odd_pair(std::size_t k) {
  if (k == 0) throw DomainError("odd(k) requires k >= 1");
  const auto [e, f] = even_pair(k);
  const std::size_t n = 2 * k + 1;
  Mat et(n, n);
  Mat ft(n, n);
  et(0, 0) = 1;
  for (std::size_t i = 0; i < 2 * k; ++i)
    for (std::size_t j = 0; j < 2 * k; ++j) {
      et(i + 1, j + 1) = e(i, j);
      ft(i + 1, j + 1) = f(i, j);
    }
  return {std::move(et), std::move(ft)};
}

Mat rank_one_idempotent(std::span<const Rat> u, std::span<const Rat> v) {
  if (u.size() != v.size() || u.empty()) throw ShapeError("rank_one: u and v must have the same nonzero length");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) < 0 || sgn(v[i]) < 0) throw DomainError("rank_one: u and v must be nonnegative");
  }
  const Rat s = dot(v, u);
  if (sgn(s) <= 0) throw DomainError("rank_one: v^T u must be positive");
  Mat e(u.size(), u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) e(i, j) = u[i] * v[j] / s;
  return e;
}

namespace {

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    auto r = parse_rat(item);
    if (!r) throw InputError("rank_one: '" + item + "' is not a rational");
    out.push_back(*r);
    start = comma + 1;
  }
  return out;
}

}  // namespace

ExamplePair build_example(std::string_view name) {
  const std::string s(name);
  if (s == "ks7") {
    auto [e, f] = ks7_pair();
    return {std::move(e), std::move(f)};
  }
  if (s == "ks6") {
    auto [e, f] = ks6_pair();
    return {std::move(e), std::move(f)};
  }
  if (s == "n2") {
    auto [e, f] = n2_pair();
    return {std::move(e), std::move(f)};
  }
  static const std::regex family(R"((even|odd)(?:\((\d+)\)|:(\d+)))");
  static const std::regex rank_one(R"(rank_one\(([^;]*);([^)]*)\))");
  std::smatch m;
  if (std::regex_match(s, m, family)) {
    const std::string digits = m[2].matched ? m[2].str() : m[3].str();
    if (digits.size() > 4) throw DomainError("example parameter too large: " + digits);
    const std::size_t k = std::stoul(digits);
    auto [e, f] = m[1] == "even" ? even_pair(k) : odd_pair(k);
    return {std::move(e), std::move(f)};
  }
  if (std::regex_match(s, m, rank_one)) {
    const auto u = parse_rat_list(m[1].str());
    const auto v = parse_rat_list(m[2].str());
    return {rank_one_idempotent(u, v), std::nullopt};
  }
  throw InputError("unknown example '" + s + "' (expected ks7, ks6, n2, even(k), odd(k), rank_one(u;v))");
}

Report quadratic_bound_check(const Mat& e, const Mat& f) {
  require_same_shape(e, f, "quadratic_bound_check");
  require_square(e, "quadratic_bound_check");
  const int de = minimal_poly(e).degree();
  const int df = minimal_poly(f).degree();
  if (de > 2 || df > 2) {
    throw DomainError("quadratic_bound_check: minimal polynomial degrees are " + std::to_string(de) + " and " +
                      std::to_string(df) + ", expected <= 2");
  }
  const std::size_t n = e.rows();
  const std::size_t bound = n % 2 == 0 ? 2 * n : 2 * n - 1;
  const std::array<Mat, 2> gens{e, f};
  Report rep;
  rep.check = "quadratic_bound";
  rep.dim = algebra_closure(gens, true).dim();
  rep.pass = *rep.dim <= bound;
  rep.details["n"] = n;
  rep.details["bound"] = bound;
  rep.details["tight"] = *rep.dim == bound;
  if (!rep.pass) rep.witness = "dimension exceeds bound";
  return rep;
}

namespace {

// [[a, b], [c, d]] from k x k blocks.
Mat blocks2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  const std::size_t k = a.rows();
  Mat m(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      m(i, j) = a(i, j);
      m(i, k + j) = b(i, j);
      m(k + i, j) = c(i, j);
      m(k + i, k + j) = d(i, j);
    }
  return m;
}

}  // namespace

Report independence_system_check(std::size_t k) {
  if (k < 2) throw DomainError("independence_system_check requires k >= 2");
  const auto [e, f] = even_pair(k);
  const Mat c = e - f;
  const Mat p = cycle_permutation(k);
  const Mat zero(k, k);
  const Mat m2p = Rat(-2) * p;

  std::vector<Mat> family;
  bool closed_forms = true;
  std::string witness;
  Mat c2j = c * c;     // C^{2j}
  Mat q = m2p;         // (-2P)^j
  for (std::size_t j = 1; j <= k; ++j) {
    const Mat c2j1 = c2j * c;
    const Mat pq = p * q;
    const std::array<std::pair<Mat, Mat>, 4> checks{{
        {c2j, blocks2(q, zero, zero, q)},
        {c2j1, blocks2(zero, Rat(2) * q, -pq, zero)},
        {c2j * e, blocks2(q, Rat(2) * q, zero, zero)},
        {c2j1 * e, blocks2(zero, zero, -pq, m2p * q)},
    }};
    static constexpr const char* labels[] = {"C^{2j}", "C^{2j+1}", "C^{2j}E", "C^{2j+1}E"};
    for (std::size_t t = 0; t < checks.size(); ++t) {
      family.push_back(checks[t].first);
      if (checks[t].first != checks[t].second && closed_forms) {
        closed_forms = false;
        witness = std::string(labels[t]) + " closed form fails at j=" + std::to_string(j);
      }
    }
    c2j = c2j * c * c;
    q = q * m2p;
  }

  const std::size_t rank = rref(family).rank;
  family.push_back(Mat::identity(2 * k));
  const std::size_t rank_with_identity = rref(family).rank;
  const std::array<Mat, 2> gens{e, f};

  Report rep;
  rep.check = "independence_system";
  rep.dim = algebra_closure(gens, true).dim();
  rep.pass = closed_forms && rank == 4 * k;
  rep.witness = witness;
  if (closed_forms && rank != 4 * k) rep.witness = "rank " + std::to_string(rank) + " < " + std::to_string(4 * k);
  rep.details["k"] = k;
  rep.details["matrices"] = 4 * k;
  rep.details["rank"] = rank;
  rep.details["rank_with_identity"] = rank_with_identity;
  rep.details["closed_forms"] = closed_forms;
  return rep;
}

}  // namespace posalg
