#include "sll/kernels.hpp"

#include <algorithm>

namespace sll::kernels {

namespace {

void triple_residuals(const Superalgebra& a, std::size_t i, std::vector<Violation>& out) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  const auto ei = unit_vector(n, i);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector& xy = a.basis_product(i, j);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector& yz = a.basis_product(j, k);
      const Vector& xz = a.basis_product(i, k);
      Vector r = a.product(ei, yz);
      axpy(r, Scalar(f, -1), a.product(xy, unit_vector(n, k)));
      axpy(r, Scalar(f, koszul_sign(a.parity(j), a.parity(k))), a.product(xz, unit_vector(n, j)));
      if (!is_zero(r)) out.push_back({Violation::Kind::Identity, i, j, k, std::move(r)});
    }
  }
}

}  // namespace

std::vector<Violation> identity_violations(const Superalgebra& a, Exec exec) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Violation>> per_row(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      triple_residuals(a, static_cast<std::size_t>(i), per_row[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) triple_residuals(a, i, per_row[i]);
  }
  std::vector<Violation> out;
  for (auto& row : per_row) {
    std::move(row.begin(), row.end(), std::back_inserter(out));
  }
  return out;
}

bool oracle_accepts(const OracleTables& t, std::uint64_t lattice_index, std::uint64_t subset) {
  const std::uint64_t lattice_bit = std::uint64_t{1} << lattice_index;
  if ((t.lattice_requires[lattice_index] & ~subset) != 0) return false;
  for (std::size_t s = 0; s < t.slot_count; ++s) {
    if (((subset >> s) & 1U) == 0) continue;
    for (const auto& req : t.slot_requires[s]) {
      if ((req.slots & ~subset) != 0) return false;
      if ((req.lattice_ok & lattice_bit) == 0) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> oracle_scan(const OracleTables& t, Exec exec) {
  const std::uint64_t subsets = std::uint64_t{1} << t.slot_count;
  const std::uint64_t total = subsets * t.lattice_size;
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> per_block(blocks);
  const auto scan_block = [&](std::uint64_t b) {
    const std::uint64_t end = std::min(total, (b + 1) * kBlock);
    for (std::uint64_t c = b * kBlock; c < end; ++c) {
      if (oracle_accepts(t, c / subsets, c % subsets)) per_block[b].push_back(c);
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      scan_block(static_cast<std::uint64_t>(b));
    }
  } else {
    for (std::uint64_t b = 0; b < blocks; ++b) scan_block(b);
  }
  std::vector<std::uint64_t> hits;
  for (auto& v : per_block) hits.insert(hits.end(), v.begin(), v.end());
  return hits;
}

namespace {

std::vector<char> bfs(const SumGraph& g, std::size_t source) {
  std::vector<char> seen(g.states, 0);
  std::vector<std::size_t> queue{source};
  seen[source] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t s = queue[head];
    for (std::size_t l = 0; l < g.letters; ++l) {
      const auto t = g.next[s * g.letters + l];
      if (t >= 0 && !seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        queue.push_back(static_cast<std::size_t>(t));
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<std::vector<char>> reachable_from(const SumGraph& g, const std::vector<std::size_t>& sources,
                                              Exec exec) {
  std::vector<std::vector<char>> out(sources.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(sources.size()); ++r) {
      out[static_cast<std::size_t>(r)] = bfs(g, sources[static_cast<std::size_t>(r)]);
    }
  } else {
    for (std::size_t r = 0; r < sources.size(); ++r) out[r] = bfs(g, sources[r]);
  }
  return out;
}

}  // namespace sll::kernels
