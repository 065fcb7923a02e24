#include "qserre/words.hpp"

#include "qserre/aqbridge.hpp"

namespace qserre {

namespace {

void validate(const Word& w) {
  for (char c : w)
    if (c != 'x' && c != 'y')
      throw invalid_parameter("word letters must be 'x' or 'y'");
}

}  // namespace

WordSignature signature(const Word& w) {
  validate(w);
  WordSignature sig;
  if (w.empty()) return sig;
  sig.leading = w.front();
  long run = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) {
      ++run;
    } else {
      sig.parts.push_back(run);
      run = 1;
    }
  }
  sig.parts.push_back(run);
  return sig;
}

bool is_reducible(const Word& w) {
  const auto parts = signature(w).parts;
  const long s = static_cast<long>(parts.size());
  for (long m = 1; m + 1 < s; ++m)
    if (parts[m - 1] >= parts[m] && parts[m] < parts[m + 1]) return true;
  return false;
}

bool is_irreducible_unimodal(const Word& w) {
  const auto parts = signature(w).parts;
  const long s = static_cast<long>(parts.size());
  if (s == 0) return true;
  for (long t = 1; t <= s; ++t) {
    bool ok = true;
    for (long i = 0; ok && i + 1 < t; ++i) ok = parts[i] < parts[i + 1];
    for (long i = t - 1; ok && i + 1 < s; ++i) ok = parts[i] >= parts[i + 1];
    if (ok) return true;
  }
  return false;
}

std::vector<Word> enumerate_irreducible(long n, long cap) {
  if (n < 0) throw invalid_parameter("word length must be nonnegative");
  if (n > cap)
    throw invalid_parameter("word length " + std::to_string(n) +
                            " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<Word> out;
  for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
    Word w(n, 'x');
    for (long i = 0; i < n; ++i)
      if (bits & (1ul << (n - 1 - i))) w[i] = 'y';
    if (!is_reducible(w)) out.push_back(std::move(w));
  }
  return out;
}

bool spanning_check(const UqRep& rep, long n) {
  if (n < 0 || n > kMaxSpanningLength)
    throw invalid_parameter("spanning_check length must be in [0, " +
                            std::to_string(kMaxSpanningLength) + "]");
  AqPair pair = build_aq_pair(rep);
  const Index dim = pair.dim;

  auto flatten = [dim](const Mat& m) {
    return Vec(Eigen::Map<const Vec>(m.data(), dim * dim));
  };

  // Word images level by level; appending a letter multiplies on the right.
  std::vector<std::pair<Word, Mat>> level{{Word(), identity(dim)}};
  std::vector<std::pair<Word, Mat>> all = level;
  for (long len = 1; len <= n; ++len) {
    std::vector<std::pair<Word, Mat>> next;
    next.reserve(level.size() * 2);
    for (const auto& [w, m] : level) {
      next.emplace_back(w + 'x', mul(m, pair.a));
      next.emplace_back(w + 'y', mul(m, pair.astar));
    }
    level = std::move(next);
    all.insert(all.end(), level.begin(), level.end());
  }

  Mat irreducible_images(dim * dim, 0);
  for (const auto& [w, m] : all) {
    if (is_reducible(w)) continue;
    irreducible_images.conservativeResize(Eigen::NoChange,
                                          irreducible_images.cols() + 1);
    irreducible_images.col(irreducible_images.cols() - 1) = flatten(m);
  }
  const Subspace span = Subspace::span(irreducible_images);
  for (const auto& [w, m] : all)
    if (is_reducible(w) && !span.contains(flatten(m))) return false;
  return true;
}

}  // namespace qserre
