#include "support_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <thread>

namespace kelc::detail {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Column echelon basis with respect to the natural row order: every basis
// vector has a distinct leading (first nonzero) row and is zero at the leading
// rows of all vectors inserted before it. Callers keep a residual vector zero
// at every leading row; its first nonzero entry is then the longest prefix of
// rows on which the target lies in the span.
class Echelon {
 public:
  Echelon(const Modulus& mod, const std::vector<Residue>& inverses, std::size_t rows,
          std::size_t capacity)
      : mod_(mod),
        inverses_(inverses),
        rows_(rows),
        vecs_(capacity * rows, 0),
        lead_(capacity, kNone),
        inv_lead_(capacity, 0),
        owner_(rows, -1) {}

  std::size_t rank() const noexcept { return rank_; }
  std::size_t lead(std::size_t i) const noexcept { return lead_[i]; }
  int owner(std::size_t row) const noexcept { return owner_[row]; }
  const Residue* vec(std::size_t i) const noexcept { return vecs_.data() + i * rows_; }

  // Inserts v and updates `residual`; returns false when v is dependent.
  bool insert(const Residue* v, Residue* residual) {
    Residue* slot = vecs_.data() + rank_ * rows_;
    std::copy(v, v + rows_, slot);
    std::size_t lead = kNone;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (slot[r] == 0) continue;
      const int o = owner_[r];
      if (o < 0) {
        if (lead == kNone) lead = r;
        continue;
      }
      const Residue factor = mod_.neg(mod_.mul(slot[r], inv_lead_[o]));
      const Residue* basis = vec(static_cast<std::size_t>(o));
      for (std::size_t i = r; i < rows_; ++i) {
        if (basis[i] != 0) slot[i] = mod_.add(slot[i], mod_.mul(factor, basis[i]));
      }
    }
    if (lead == kNone) return false;
    inv_lead_[rank_] = inverses_[slot[lead]];
    lead_[rank_] = lead;
    owner_[lead] = static_cast<int>(rank_);
    if (residual[lead] != 0) {
      const Residue factor = mod_.neg(mod_.mul(residual[lead], inv_lead_[rank_]));
      for (std::size_t i = lead; i < rows_; ++i) {
        if (slot[i] != 0) residual[i] = mod_.add(residual[i], mod_.mul(factor, slot[i]));
      }
    }
    ++rank_;
    return true;
  }

  void pop() {
    --rank_;
    owner_[lead_[rank_]] = -1;
    lead_[rank_] = kNone;
  }

  void clear() {
    while (rank_ > 0) pop();
  }

 private:
  const Modulus& mod_;
  const std::vector<Residue>& inverses_;
  std::size_t rows_;
  std::vector<Residue> vecs_;
  std::vector<std::size_t> lead_;
  std::vector<Residue> inv_lead_;
  std::vector<int> owner_;
  std::size_t rank_ = 0;
};

std::size_t first_nonzero(const Residue* v, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) return i;
  }
  return n;
}

// One depth-first walk over supports. Two echelon forms are kept in step:
// `plus_first_` orders rows (+1 rows, -1 rows) and yields the largest m0 the
// support can reach on its own; `minus_first_` orders rows (-1, +1) and yields
// the largest m1 on its own. Their sum bounds m0 + m1 and lets most supports
// skip the staircase walk in evaluate().
class Walker {
 public:
  Walker(const ConstraintSystem& system, std::size_t k_max, std::uint64_t limit)
      : sys_(system),
        mod_(system.p),
        inverses_(make_inverses(system.p)),
        rows_(system.rows()),
        k_max_(k_max),
        limit_(limit),
        capacity_(std::min(k_max, rows_) + 1),
        plus_first_(mod_, inverses_, rows_, capacity_),
        minus_first_(mod_, inverses_, rows_, capacity_),
        staircase_(mod_, inverses_, system.minus_rows, capacity_),
        resid_plus_((k_max + 1) * rows_, 0),
        resid_minus_((k_max + 1) * rows_, 0),
        independent_plus_(k_max + 1, false),
        independent_minus_(k_max + 1, false),
        rotated_(two_sided() ? system.positions * rows_ : 0),
        rho_(system.minus_rows, 0),
        best_(k_max + 1) {
    std::copy(system.rhs.begin(), system.rhs.end(), resid_plus_.begin());
    if (two_sided()) {
      rotate(system.rhs.data(), resid_minus_.data());
      for (std::size_t t = 0; t < system.positions; ++t) {
        rotate(system.column(t), rotated_.data() + t * rows_);
      }
    }
    support_.reserve(k_max + 1);
  }

  Walker(const Walker&) = delete;
  Walker& operator=(const Walker&) = delete;

  void run_root() {
    if (!admit()) return;
    evaluate(0);
  }

  // Explores every support whose smallest element is `first`.
  void run_subtree(std::uint32_t first) {
    if (k_max_ == 0) return;
    descend(0, first);
  }

  void run_all() {
    run_root();
    for (std::uint32_t t = 0; t < sys_.positions && !truncated_; ++t) run_subtree(t);
  }

  std::vector<SizeBest>& best() noexcept { return best_; }
  std::uint64_t visited() const noexcept { return visited_; }
  bool truncated() const noexcept { return truncated_; }

 private:
  static std::vector<Residue> make_inverses(std::uint32_t p) {
    const Modulus mod(p);
    std::vector<Residue> inv(p, 0);
    for (Residue a = 1; a < p; ++a) inv[a] = mod.inv(a);
    return inv;
  }

  bool two_sided() const noexcept { return sys_.minus_rows > 0; }

  void rotate(const Residue* src, Residue* dst) const {
    std::copy(src + sys_.plus_rows, src + rows_, dst);
    std::copy(src, src + sys_.plus_rows, dst + sys_.minus_rows);
  }

  bool admit() {
    if (visited_ >= limit_) {
      truncated_ = true;
      return false;
    }
    ++visited_;
    return true;
  }

  // Adds position t to a support of size `depth` and recurses.
  void descend(std::size_t depth, std::uint32_t t) {
    if (!admit()) return;
    Residue* plus_next = resid_plus_.data() + (depth + 1) * rows_;
    std::copy_n(resid_plus_.data() + depth * rows_, rows_, plus_next);
    independent_plus_[depth + 1] = plus_first_.insert(sys_.column(t), plus_next);
    if (two_sided()) {
      Residue* minus_next = resid_minus_.data() + (depth + 1) * rows_;
      std::copy_n(resid_minus_.data() + depth * rows_, rows_, minus_next);
      independent_minus_[depth + 1] = minus_first_.insert(rotated_.data() + t * rows_, minus_next);
    }
    support_.push_back(t);

    evaluate(depth + 1);
    if (depth + 1 < k_max_) {
      for (std::uint32_t next = t + 1; next < sys_.positions && !truncated_; ++next) {
        descend(depth + 1, next);
      }
    }

    support_.pop_back();
    if (independent_plus_[depth + 1]) plus_first_.pop();
    if (two_sided() && independent_minus_[depth + 1]) minus_first_.pop();
  }

  void record(std::size_t size, std::size_t sum, std::size_t m0, std::size_t m1) {
    SizeBest& b = best_[size];
    if (b.found && sum <= b.best_sum) return;
    b.found = true;
    b.best_sum = sum;
    b.m0 = m0;
    b.m1 = m1;
    b.support = support_;
  }

  void evaluate(std::size_t size) {
    const Residue* beta = resid_plus_.data() + size * rows_;
    const std::size_t m0_alone = first_nonzero(beta, sys_.plus_rows);
    if (!two_sided()) {
      record(size, m0_alone, m0_alone, 0);
      return;
    }
    const std::size_t m1_alone =
        first_nonzero(resid_minus_.data() + size * rows_, sys_.minus_rows);
    const SizeBest& current = best_[size];
    const bool have = current.found;
    const std::size_t threshold = current.best_sum;
    if (have && m0_alone + m1_alone <= threshold) return;

    // Staircase walk. U(m0) = {v in span : v vanishes on +1 rows below m0} is
    // spanned by the basis vectors leading at row >= m0, so the best m1 for
    // every m0 in (r_{i-1}, r_i] is read off after inserting the vectors with
    // lead >= r_i into an echelon over the -1 rows.
    staircase_.clear();
    std::copy(beta + sys_.plus_rows, beta + rows_, rho_.begin());
    for (std::size_t i = 0; i < plus_first_.rank(); ++i) {
      if (plus_first_.lead(i) >= m0_alone) {
        staircase_.insert(plus_first_.vec(i) + sys_.plus_rows, rho_.data());
      }
    }
    std::size_t m1 = first_nonzero(rho_.data(), sys_.minus_rows);
    std::size_t node_best = m0_alone + m1;
    std::size_t node_m0 = m0_alone;
    std::size_t node_m1 = m1;
    for (std::size_t r = m0_alone; r-- > 0;) {
      const int o = plus_first_.owner(r);
      if (o < 0) continue;
      const std::size_t floor_sum = have ? std::max(node_best, threshold) : node_best;
      if (r + m1_alone <= floor_sum) break;
      staircase_.insert(plus_first_.vec(static_cast<std::size_t>(o)) + sys_.plus_rows, rho_.data());
      m1 = first_nonzero(rho_.data(), sys_.minus_rows);
      if (r + m1 > node_best) {
        node_best = r + m1;
        node_m0 = r;
        node_m1 = m1;
      }
    }
    record(size, node_best, node_m0, node_m1);
  }

  const ConstraintSystem& sys_;
  Modulus mod_;
  std::vector<Residue> inverses_;
  std::size_t rows_;
  std::size_t k_max_;
  std::uint64_t limit_;
  std::size_t capacity_;
  Echelon plus_first_;
  Echelon minus_first_;
  Echelon staircase_;
  std::vector<Residue> resid_plus_;
  std::vector<Residue> resid_minus_;
  std::vector<bool> independent_plus_;
  std::vector<bool> independent_minus_;
  std::vector<Residue> rotated_;
  std::vector<Residue> rho_;
  std::vector<std::uint32_t> support_;
  std::vector<SizeBest> best_;
  std::uint64_t visited_ = 0;
  bool truncated_ = false;
};

bool better(const SizeBest& a, const SizeBest& b) {
  if (!a.found) return false;
  if (!b.found) return true;
  if (a.best_sum != b.best_sum) return a.best_sum > b.best_sum;
  return a.support < b.support;
}

}  // namespace

ConstraintSystem build_constraints(const PolyFp& s, std::size_t period) {
  const std::uint32_t p = s.modulus();
  ConstraintSystem sys;
  sys.p = p;
  sys.positions = period;
  sys.plus_rows = p;
  sys.minus_rows = period == 2 * static_cast<std::size_t>(p) ? p : 0;
  const std::size_t rows = sys.rows();
  const Binomials& binom = binomials_for(p);
  const Modulus& mod = binom.field();

  sys.columns.assign(period * rows, 0);
  for (std::size_t t = 0; t < period; ++t) {
    Residue* col = sys.columns.data() + t * rows;
    for (std::size_t n = 0; n < sys.plus_rows; ++n) {
      const Residue c = binom.choose(t, n);
      col[n] = c;
      if (sys.minus_rows > 0 && n < sys.minus_rows) {
        const bool odd = t >= n && (t - n) % 2 == 1;
        col[sys.plus_rows + n] = odd ? mod.neg(c) : c;
      }
    }
  }
  sys.rhs.assign(rows, 0);
  for (std::size_t n = 0; n < sys.plus_rows; ++n) {
    sys.rhs[n] = mod.neg(hasse_eval(s, n, Point::kPlusOne));
  }
  for (std::size_t n = 0; n < sys.minus_rows; ++n) {
    sys.rhs[sys.plus_rows + n] = mod.neg(hasse_eval(s, n, Point::kMinusOne));
  }
  return sys;
}

std::uint64_t count_supports(std::size_t n, std::size_t k_max) noexcept {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  Wide term = 1;
  Wide total = 0;
  for (std::size_t j = 0; j <= std::min(k_max, n); ++j) {
    if (j > 0) term = term * (n - j + 1) / j;
    total += term;
    if (total >= kMax) return kMax;
  }
  return static_cast<std::uint64_t>(total);
}

SearchOutcome search_supports(const ConstraintSystem& system, std::size_t k_max,
                              std::uint64_t limit, unsigned workers) {
  k_max = std::min(k_max, system.positions);
  SearchOutcome out;
  const std::uint64_t total = count_supports(system.positions, k_max);

  if (total > limit || workers <= 1 || k_max == 0) {
    Walker walker(system, k_max, limit);
    walker.run_all();
    out.per_size = std::move(walker.best());
    out.visited = walker.visited();
    out.truncated = walker.truncated();
    return out;
  }

  std::vector<std::unique_ptr<Walker>> walkers;
  for (unsigned w = 0; w < workers; ++w) {
    walkers.push_back(std::make_unique<Walker>(system, k_max, limit));
  }
  walkers[0]->run_root();
  std::atomic<std::uint32_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint32_t t = next++; t < system.positions; t = next++) {
          walkers[w]->run_subtree(t);
        }
      });
    }
  }
  out.per_size.resize(k_max + 1);
  for (auto& w : walkers) {
    out.visited += w->visited();
    for (std::size_t d = 0; d <= k_max; ++d) {
      if (better(w->best()[d], out.per_size[d])) out.per_size[d] = w->best()[d];
    }
  }
  return out;
}

}  // namespace kelc::detail
