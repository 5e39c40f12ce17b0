#include "theta/rep_params.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "theta/errors.hpp"

namespace theta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition: parts must be weakly decreasing");
  }
}

Partition Partition::from_columns(std::vector<int> columns) {
  return Partition(std::move(columns)).conjugate();
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int size, int max_length) {
  std::vector<Partition> out;
  if (size < 0 || max_length < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_length) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(size, size);
  return out;
}

bool OrthIrrepParam::admissible() const {
  if (n < 1) return false;
  Partition c = lambda.conjugate();
  return c.part(1) + c.part(2) <= n;
}

void OrthIrrepParam::validate() const {
  if (!admissible())
    throw InvalidArgument("O(" + std::to_string(n) + ") label " + lambda.to_string() +
                          " is not admissible");
}

std::string OrthIrrepParam::to_string() const {
  return "O(" + std::to_string(n) + ")" + lambda.to_string();
}

bool GlIrrepParam::dominant() const {
  if (static_cast<int>(weight.size()) != k) return false;
  for (std::size_t i = 1; i < weight.size(); ++i)
    if (weight[i] > weight[i - 1]) return false;
  return true;
}

std::vector<OrthIrrepParam> enumerate_orth_params(int n, int size_max) {
  if (n < 1) throw InvalidArgument("enumerate_orth_params: n must be >= 1");
  std::vector<OrthIrrepParam> out;
  for (int s = 0; s <= size_max; ++s)
    for (auto& lambda : partitions_of(s, n)) {
      OrthIrrepParam p{n, std::move(lambda)};
      if (p.admissible()) out.push_back(std::move(p));
    }
  return out;
}

OrthIrrepParam det_twist(const OrthIrrepParam& p) {
  p.validate();
  std::vector<int> columns = p.lambda.conjugate().parts();
  if (columns.empty()) columns.push_back(p.n);
  else columns.front() = p.n - columns.front();
  // admissibility keeps n - c_1 >= c_2, so the columns stay sorted
  OrthIrrepParam out{p.n, Partition::from_columns(std::move(columns))};
  out.validate();
  return out;
}

std::int64_t gl_dimension(const GlIrrepParam& p) {
  if (!p.dominant()) throw InvalidArgument("gl_dimension: weight is not dominant");
  mpq_class num = 1;
  mpq_class den = 1;
  for (int i = 0; i < p.k; ++i)
    for (int j = i + 1; j < p.k; ++j) {
      Rational diff = p.weight[static_cast<std::size_t>(i)] - p.weight[static_cast<std::size_t>(j)];
      if (!diff.is_integer())
        throw InvalidArgument("gl_dimension: weight differences must be integers");
      num *= (diff + Rational(j - i)).to_mpq();
      den *= j - i;
    }
  mpq_class q = num / den;
  q.canonicalize();
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw InvalidArgument("gl_dimension: dimension does not fit");
  return q.get_num().get_si();
}

int predicted_first_occurrence(const OrthIrrepParam& p) {
  p.validate();
  return p.lambda.length();
}

bool is_paired_label(const OrthIrrepParam& p) {
  return p.n % 2 == 0 && p.lambda.length() == p.n / 2 && p.n > 0 && !p.lambda.empty();
}

std::vector<int> so_highest_weight(const OrthIrrepParam& p) {
  p.validate();
  const int m = so_rank(p.n);
  const Partition& lam = p.lambda.length() <= m ? p.lambda : det_twist(p).lambda;
  std::vector<int> mu(static_cast<std::size_t>(m), 0);
  for (int a = 1; a <= m; ++a) mu[static_cast<std::size_t>(a - 1)] = lam.part(a);
  return mu;
}

OrthIrrepParam label_from_so_weight(int n, const std::vector<int>& mu, int sign) {
  const int m = so_rank(n);
  if (static_cast<int>(mu.size()) != m) throw InvalidArgument("so weight has the wrong length");
  std::vector<int> parts(mu.begin(), mu.end());
  if (m > 0) parts.back() = std::abs(parts.back());
  OrthIrrepParam base{n, Partition(parts)};
  base.validate();
  if (n % 2 == 1) {
    int size_parity = base.lambda.size() % 2 == 0 ? 1 : -1;
    return size_parity == sign ? base : det_twist(base);
  }
  if (m > 0 && mu.back() != 0) return base;
  return sign > 0 ? base : det_twist(base);
}

}  // namespace theta
