#include "derange/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>

#include "derange/bijections.hpp"
#include "derange/error.hpp"

namespace derange {
namespace {

OracleReport make_report(std::string quantity, int n, std::optional<int> k,
                         BigInt brute, BigInt formula) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.n = n;
  r.k = k;
  r.brute_value = std::move(brute);
  r.formula_value = std::move(formula);
  r.agrees = r.brute_value == r.formula_value;
  return r;
}

// Packs a marked permutation into 4 bits per element plus 4 mark bits; sound
// for sizes up to 15, far above the enumeration caps.
std::uint64_t marked_key(const MarkedPermutation& m) {
  std::uint64_t key = static_cast<std::uint64_t>(m.mark);
  for (int v : m.perm.one_line()) {
    key = (key << 4) | static_cast<std::uint64_t>(v);
  }
  return key;
}

}  // namespace

BigInt brute_count(int n, const CountSpec& spec, EnumOrder order, int size_cap) {
  long long acc = 0;
  for_each_permutation(
      n,
      [&](const std::vector<int>& img) {
        int fixed = 0, largest = 0, smallest = 0;
        for (int i = 1; i <= n; ++i) {
          if (img[static_cast<std::size_t>(i - 1)] == i) {
            ++fixed;
            largest = i;
            if (smallest == 0) smallest = i;
          }
        }
        switch (spec.kind) {
          case CountSpec::Kind::derangement:
            acc += fixed == 0;
            break;
          case CountSpec::Kind::largest_is:
            acc += fixed > 0 && largest == spec.k;
            break;
          case CountSpec::Kind::smallest_is:
            acc += fixed > 0 && smallest == spec.k;
            break;
          case CountSpec::Kind::at_least_two_fixed:
            acc += fixed >= 2;
            break;
          case CountSpec::Kind::sum_largest:
            acc += largest;
            break;
          case CountSpec::Kind::sum_smallest:
            acc += smallest;
            break;
          default:
            fail(Errc::unknown_spec, "unrecognized count spec");
        }
      },
      order, size_cap);
  return BigInt(acc);
}

std::vector<OracleReport> verify_bijection(int n_plus_1, BijectionKind which,
                                           int size_cap) {
  if (n_plus_1 < 2) {
    fail(Errc::size_too_small, "bijection verification needs size >= 2, got " +
                                   std::to_string(n_plus_1));
  }
  const int n = n_plus_1 - 1;
  const bool use_phi = which == BijectionKind::phi;
  const MarkMode mode = use_phi ? MarkMode::largest : MarkMode::smallest;

  long long domain = 0;
  long long verified = 0;
  std::unordered_set<std::uint64_t> seen;
  for_each_permutation(
      n_plus_1,
      [&](const std::vector<int>& img) {
        int fixed = 0;
        for (int i = 1; i <= n_plus_1; ++i) {
          fixed += img[static_cast<std::size_t>(i - 1)] == i;
        }
        if (use_phi ? fixed != 0 : fixed < 2) return;
        ++domain;
        const Permutation p(img);
        try {
          const MarkedPermutation m = use_phi ? phi(p) : psi(p);
          validate_marked(m);
          if (m.perm.size() != n || m.mode != mode) return;
          const Permutation back = use_phi ? phi_inv(m) : psi_inv(m);
          if (back != p) return;
          if (seen.insert(marked_key(m)).second) ++verified;
        } catch (const Error&) {
          // A throwing map is a verification failure; the pair stays
          // unverified and the final report disagrees.
        }
      },
      EnumOrder::lex_ascending, size_cap);

  long long codomain = 0;
  MarkedStream stream(n, mode, std::max(n, kMarkedCap));
  while (stream.next().has_value()) ++codomain;

  const DerangementSequence d = derangements_up_to(n_plus_1);
  std::vector<OracleReport> reports;
  if (use_phi) {
    const CountTriangle a = a_triangle(n);
    reports.push_back(make_report("d", n_plus_1, std::nullopt, domain, d.at(n_plus_1)));
    reports.push_back(make_report("alpha", n, std::nullopt, codomain, alpha(n, a)));
    reports.push_back(make_report("phi", n_plus_1, std::nullopt, verified, codomain));
  } else {
    const CountTriangle b = b_triangle(n);
    reports.push_back(
        make_report("e_count", n_plus_1, std::nullopt, domain, e_count(n_plus_1)));
    reports.push_back(make_report("beta", n, std::nullopt, codomain, beta(n, b)));
    reports.push_back(make_report("psi", n_plus_1, std::nullopt, verified, codomain));
  }
  return reports;
}

std::vector<OracleReport> full_sweep(int max_n, const CountTriangle& a,
                                     const CountTriangle& b,
                                     const DerangementSequence& d,
                                     EnumOrder order, int size_cap) {
  std::vector<OracleReport> reports;
  for (int n = 1; n <= max_n; ++n) {
    long long derangements = 0, two_plus = 0, sum_l = 0, sum_s = 0;
    std::vector<long long> l_hist(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> s_hist(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> case1(static_cast<std::size_t>(n) + 1, 0);
    std::vector<long long> case2(static_cast<std::size_t>(n) + 1, 0);
    for_each_permutation(
        n,
        [&](const std::vector<int>& img) {
          int fixed = 0, largest = 0, smallest = 0;
          for (int i = 1; i <= n; ++i) {
            if (img[static_cast<std::size_t>(i - 1)] == i) {
              ++fixed;
              largest = i;
              if (smallest == 0) smallest = i;
            }
          }
          if (fixed == 0) {
            ++derangements;
            const DecompositionClass cls = classify_derangement(Permutation(img));
            auto& hist = cls.which == DecompositionClass::Case::one ? case1 : case2;
            ++hist[static_cast<std::size_t>(cls.index)];
          } else {
            ++l_hist[static_cast<std::size_t>(largest)];
            ++s_hist[static_cast<std::size_t>(smallest)];
            sum_l += largest;
            sum_s += smallest;
            two_plus += fixed >= 2;
          }
        },
        order, size_cap);

    reports.push_back(make_report("d", n, std::nullopt, derangements, d.at(n)));
    for (int k = 1; k <= n; ++k) {
      reports.push_back(make_report("a", n, k, l_hist[static_cast<std::size_t>(k)],
                                    a.at(n, k)));
    }
    for (int k = 1; k <= n; ++k) {
      reports.push_back(make_report("b", n, k, s_hist[static_cast<std::size_t>(k)],
                                    b.at(n, k)));
    }
    reports.push_back(make_report("alpha", n, std::nullopt, sum_l, alpha(n, a)));
    reports.push_back(make_report("beta", n, std::nullopt, sum_s, beta(n, b)));
    reports.push_back(make_report("e_count", n, std::nullopt, two_plus, e_count(n)));
    for (int r = 1; r <= n - 1; ++r) {
      reports.push_back(make_report("case1", n, r, case1[static_cast<std::size_t>(r)],
                                    r * binomial(n - 1, r) * d.at(n - r - 1)));
    }
    for (int q = 1; q <= n - 3; ++q) {
      reports.push_back(make_report("case2", n, q, case2[static_cast<std::size_t>(q)],
                                    q * binomial(n - 1, q + 1) * d.at(n - q - 1)));
    }
  }
  return reports;
}

std::vector<OracleReport> full_sweep(int max_n, EnumOrder order, int size_cap) {
  const int table_n = std::max(max_n, 1);
  return full_sweep(max_n, a_triangle(table_n), b_triangle(table_n),
                    derangements_up_to(table_n), order, size_cap);
}

bool all_agree(const std::vector<OracleReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const OracleReport& r) { return r.agrees; });
}

std::string reports_csv(const std::vector<OracleReport>& reports) {
  std::string out = "quantity,n,k,brute,formula,agrees\n";
  for (const OracleReport& r : reports) {
    out += r.quantity;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    if (r.k.has_value()) out += std::to_string(*r.k);
    out += ',';
    out += r.brute_value.str();
    out += ',';
    out += r.formula_value.str();
    out += ',';
    out += r.agrees ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace derange
