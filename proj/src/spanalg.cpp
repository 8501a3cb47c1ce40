#include "posalg/spanalg.hpp"

#include "posalg/errors.hpp"

namespace posalg {

std::vector<std::string> default_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.emplace_back(1, static_cast<char>('A' + i % 26));
  return names;
}

std::string to_string(const Word& w, std::span<const std::string> names) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (auto l : w.letters) {
    if (l >= names.size()) throw InputError("word letter " + std::to_string(l) + " has no name");
    s += names[l];
  }
  return s;
}

Word parse_word(std::string_view text, std::span<const std::string> names) {
  Word w;
  if (text == "1") return w;
  if (text.empty()) throw InputError("empty word (use \"1\" for the identity)");
  for (char c : text) {
    std::size_t idx = names.size();
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k].size() == 1 && names[k][0] == c) {
        idx = k;
        break;
      }
    }
    if (idx == names.size()) throw InputError(std::string("unknown generator '") + c + "' in word");
    w.letters.push_back(idx);
  }
  return w;
}

Mat evaluate(const Word& w, std::span<const Mat> generators, std::size_t n) {
  Mat acc = Mat::identity(n);
  for (auto l : w.letters) {
    if (l >= generators.size()) throw InputError("word letter out of range");
    acc = acc * generators[l];
  }
  return acc;
}

namespace {

std::size_t common_size(std::span<const Mat> generators, std::size_t size) {
  if (generators.empty()) return size;
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    require_square(g, "algebra generator");
    if (g.rows() != n) throw ShapeError("algebra generators differ in size");
  }
  if (size != 0 && size != n) throw ShapeError("generator size differs from requested size");
  return n;
}

}  // namespace

AlgebraBasis algebra_closure(std::span<const Mat> generators, bool unital, std::size_t size) {
  AlgebraBasis alg;
  alg.n = common_size(generators, size);
  alg.generators.assign(generators.begin(), generators.end());
  alg.unital = unital;
  alg.span = SpanBuilder(alg.n * alg.n);

  auto offer = [&](Mat m, Word w) {
    if (alg.span.insert(m.entries())) {
      alg.basis.push_back(std::move(m));
      alg.words.push_back(std::move(w));
    }
  };

  if (unital) offer(Mat::identity(alg.n), Word{});
  for (std::size_t g = 0; g < generators.size(); ++g) offer(generators[g], Word{{g}});

  for (std::size_t i = 0; i < alg.basis.size(); ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Word w = alg.words[i];
      w.letters.push_back(g);
      offer(alg.basis[i] * generators[g], std::move(w));
    }
  }
  return alg;
}

std::optional<Vec> membership(const Mat& m, const AlgebraBasis& alg) {
  if (m.rows() != alg.n || m.cols() != alg.n) throw ShapeError("membership: size mismatch");
  return alg.span.coordinates(m.entries());
}

std::vector<Mat> trace_radical(const AlgebraBasis& alg) {
  const std::size_t d = alg.dim();
  std::vector<Vec> gram(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      gram[i][j] = (alg.basis[i] * alg.basis[j]).trace();
      gram[j][i] = gram[i][j];
    }
  }
  std::vector<Mat> radical;
  for (const auto& c : null_space(gram, d)) {
    Mat r(alg.n, alg.n);
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(c[i]) != 0) r += alg.basis[i] * c[i];
    }
    radical.push_back(std::move(r));
  }
  return radical;
}

Report triangularizable_report(const AlgebraBasis& alg) {
  Report rep;
  rep.check = "triangularizable";
  rep.dim = alg.dim();
  const auto radical = trace_radical(alg);
  rep.radical_dim = radical.size();

  SpanBuilder rad(alg.n * alg.n);
  for (const auto& r : radical) rad.insert(r.entries());

  const auto names = default_names(alg.generators.size());
  rep.pass = true;
  for (std::size_t i = 0; i < alg.dim() && rep.pass; ++i) {
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      if (!rad.contains(commutator(alg.basis[i], alg.basis[j]).entries())) {
        rep.pass = false;
        rep.witness = "[" + to_string(alg.words[i], names) + "," + to_string(alg.words[j], names) +
                      "] not in radical";
        break;
      }
    }
  }
  return rep;
}

Report is_triangularizable(std::span<const Mat> generators, std::size_t size) {
  return triangularizable_report(algebra_closure(generators, true, size));
}

Report spanning_word_check(std::span<const Mat> generators, std::span<const Word> words,
                           std::span<const std::string> names) {
  const AlgebraBasis alg = algebra_closure(generators, true);
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_names(generators.size());
    names = fallback;
  }

  SpanBuilder word_span(alg.n * alg.n);
  Json listed = Json::array();
  for (const auto& w : words) {
    word_span.insert(evaluate(w, generators, alg.n).entries());
    listed.push_back(to_string(w, names));
  }

  Report rep;
  rep.check = "spanning_words";
  rep.dim = alg.dim();
  // Every evaluated word lies in the unital algebra, so equal ranks mean equal spans.
  rep.pass = word_span.rank() == alg.dim();
  rep.details["word_span_dim"] = word_span.rank();
  rep.details["words"] = std::move(listed);
  if (!rep.pass) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      if (!word_span.contains(alg.basis[i].entries())) {
        rep.witness = to_string(alg.words[i], names) + " not in span of words";
        break;
      }
    }
  }
  return rep;
}

}  // namespace posalg
