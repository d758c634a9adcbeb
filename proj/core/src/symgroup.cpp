#include "lop/symgroup.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lop/error.hpp"

namespace lop {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidArgument, "not a permutation: " + to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> images;
  int v = 0;
  while (in >> v) images.push_back(v);
  if (!in.eof()) throw Error(ErrorCode::InvalidArgument, "bad permutation text: " + std::string(text));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::SizeMismatch, "compose: degrees " + std::to_string(p.size()) + " and " +
                                             std::to_string(q.size()));
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) images[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, int k) {
  Permutation r = Permutation::identity(p.size());
  for (int i = 0; i < k; ++i) r = compose(p, r);
  return r;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

namespace {

void check_degree(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  if (n > kMaxDegree)
    throw Error(ErrorCode::NTooLarge, "n=" + std::to_string(n) + " exceeds the cap of " +
                                          std::to_string(kMaxDegree));
}

}  // namespace

std::vector<Permutation> enumerate(int n) {
  check_degree(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

const std::vector<Permutation>& elements(int n) {
  static std::array<std::vector<Permutation>, kMaxDegree + 1> cache;
  static std::array<std::once_flag, kMaxDegree + 1> flags;
  check_degree(n);
  std::call_once(flags[static_cast<std::size_t>(n)],
                 [n] { cache[static_cast<std::size_t>(n)] = enumerate(n); });
  return cache[static_cast<std::size_t>(n)];
}

std::size_t lex_index(const Permutation& p) {
  // Lehmer code read in the factorial number system.
  const int n = p.size();
  std::size_t index = 0;
  for (int i = 1; i <= n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller;
    index += smaller * factorial(n - i);
  }
  return index;
}

Permutation reversal(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return Permutation(std::move(images));
}

Permutation cyc(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
  return Permutation(std::move(images));
}

Permutation transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw Error(ErrorCode::InvalidArgument, "transposition points out of range");
  std::vector<int> images = Permutation::identity(n).images();
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(images));
}

std::vector<Permutation> adjacent_transpositions(int n) {
  std::vector<Permutation> out;
  for (int i = 1; i < n; ++i) out.push_back(transposition(n, i, i + 1));
  return out;
}

Permutation coset_representative(const Permutation& p) {
  const int n = p.size();
  // cyc^k sends p(n) to n when k = n - p(n).
  return compose(power(cyc(n), n - p(n)), p);
}

Permutation restrict_last(const Permutation& p) {
  const int n = p.size();
  if (n < 2 || p(n) != n) throw Error(ErrorCode::InvalidArgument, "permutation does not fix n");
  std::vector<int> images(p.images().begin(), p.images().end() - 1);
  return Permutation(std::move(images));
}

CosetPartition cyclic_cosets(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "cyclic cosets need n >= 2");
  const auto& group = elements(n);
  const Permutation c = cyc(n);
  CosetPartition part;
  part.class_of.assign(group.size(), group.size());
  for (const auto& p : group) {
    if (part.class_of[lex_index(p)] != group.size()) continue;
    const std::size_t k = part.classes.size();
    std::vector<Permutation> members;
    Permutation q = p;
    for (int s = 0; s < n; ++s) {
      members.push_back(q);
      part.class_of[lex_index(q)] = k;
      q = compose(c, q);
    }
    std::sort(members.begin(), members.end());
    part.representatives.push_back(coset_representative(p));
    part.classes.push_back(std::move(members));
  }
  return part;
}

std::vector<int> cycle_type(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  std::vector<int> type;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  std::map<std::vector<int>, ConjugacyClass> by_type;
  for (const auto& p : elements(n)) {
    auto type = cycle_type(p);
    auto [it, inserted] = by_type.try_emplace(type);
    if (inserted) {
      it->second.cycle_type = type;
      it->second.representative = p;
    }
    ++it->second.size;
  }
  std::vector<ConjugacyClass> out;
  for (auto& [type, cls] : by_type) out.push_back(std::move(cls));
  return out;
}

}  // namespace lop
