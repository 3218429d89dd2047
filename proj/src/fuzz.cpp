#include "sll/fuzz.hpp"

#include <random>

namespace sll {

namespace {

constexpr std::size_t kMaxSlots = 14;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // Raw engine output reduced mod n: reproducible across standard libraries.
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 rng_;
};

Scalar random_scale(Draw& r) {
  const long num = 1 + static_cast<long>(r.below(3));
  const long den = 1 + static_cast<long>(r.below(2));
  const Scalar s = Scalar(Field::rationals(), mpq_class(num, den));
  return r.chance(1, 2) ? -s : s;
}

Matrix random_graded_invertible(Draw& r, const Grading& g) {
  const std::size_t n = g.dim();
  for (;;) {
    Matrix p(Field::rationals(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (g[i] != g[j] || r.chance(1, 3)) continue;
        p(i, j) = Scalar(static_cast<long>(r.below(5)) - 2);
      }
    }
    if (rank(p) == n) return p;
  }
}

}  // namespace

std::vector<FuzzMember> fuzz_corpus(std::uint64_t seed, std::size_t count) {
  Draw r(seed);
  std::vector<FuzzMember> out;
  for (std::size_t m = 0; m < count; ++m) {
    FuzzMember member;
    const std::size_t blocks = 1 + r.below(3);
    std::size_t slots = 0;
    std::optional<AlgebraDocument> sum;
    for (std::size_t b = 0; b < blocks; ++b) {
      AlgebraDocument block;
      const auto kind = r.below(10);
      std::string label;
      int n = r.chance(1, 8) ? 5 : (r.chance(1, 2) ? 1 : 3);
      if (kind < 4 && slots + 4 <= kMaxSlots) {
        block = gen_example1();
        label = "example1";
        slots += 4;
        ++member.root_blocks;
      } else if (kind < 8 && slots + static_cast<std::size_t>(n) + 3 <= kMaxSlots) {
        block = gen_example2(n);
        label = "example2(" + std::to_string(n) + ")";
        slots += static_cast<std::size_t>(n) + 3;
        ++member.root_blocks;
      } else {
        std::vector<Parity> parity;
        const std::size_t dim = 1 + r.below(2);
        for (std::size_t i = 0; i < dim; ++i) parity.push_back(r.chance(1, 2) ? Parity::Odd : Parity::Even);
        block = gen_abelian(Field::rationals(), parity);
        label = "abelian(";
        for (std::size_t i = 0; i < dim; ++i) label += (i ? "," : "") + std::to_string(index(parity[i]));
        label += ")";
      }
      const Scalar scale = random_scale(r);
      for (auto& c : block.cartan) {
        for (auto& x : c) x *= scale;
      }
      label += " x " + scale.to_string();
      member.provenance += (b ? " + " : "") + label;
      sum = sum ? direct_sum(*sum, block) : block;
    }
    sum->meta = {};
    member.original = *sum;
    member.doc = *sum;
    if (!r.chance(1, 4)) {
      member.basis_change = random_graded_invertible(r, sum->algebra.grading());
      member.doc = change_basis(*sum, *member.basis_change);
      member.provenance += "; change of basis";
    }
    member.doc.meta.name = "fuzz_" + std::to_string(seed) + "_" + std::to_string(m);
    member.doc.meta.seed = seed;
    out.push_back(std::move(member));
  }
  return out;
}

}  // namespace sll
