#include "psp4/sympl.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace psp4::sympl {

FieldSize FieldSize::from_q(const BigInt& q) {
  const auto f = arith::log2_exact(q);
  if (!f || *f < 2) {
    throw std::invalid_argument(
        "q must be a power of 2 greater than 2 (q = 2 is excluded), got " +
        to_decimal(q));
  }
  return FieldSize(*f, q);
}

FieldSize FieldSize::from_degree(unsigned f) {
  if (f < 2) {
    throw std::invalid_argument("q = 2^f needs f >= 2, got f = " +
                                std::to_string(f));
  }
  return FieldSize(f, pow(BigInt(2), f));
}

BigInt group_order(const FieldSize& fs) {
  const BigInt& q = fs.q();
  const BigInt q2 = q * q;
  const BigInt q4 = q2 * q2;
  return q4 * (q4 - 1) * (q2 - 1);
}

std::vector<BigInt> spectrum(const FieldSize& fs) {
  const BigInt& q = fs.q();
  std::set<BigInt> orders;
  for (const BigInt& n :
       {BigInt(4), BigInt(2 * (q - 1)), BigInt(2 * (q + 1)),
        BigInt(q * q - 1), BigInt(q * q + 1)}) {
    for (auto& d : arith::divisors(n)) orders.insert(d);
  }
  return {orders.begin(), orders.end()};
}

// ---------------------------------------------------------------------

std::string to_string(ClassFamily family) {
  switch (family) {
    case ClassFamily::A1: return "A1";
    case ClassFamily::A2: return "A2";
    case ClassFamily::A31: return "A31";
    case ClassFamily::A32: return "A32";
    case ClassFamily::A41: return "A41";
    case ClassFamily::A42: return "A42";
    case ClassFamily::B1: return "B1";
    case ClassFamily::B2: return "B2";
    case ClassFamily::B3: return "B3";
    case ClassFamily::B4: return "B4";
    case ClassFamily::B5: return "B5";
    case ClassFamily::C1: return "C1";
    case ClassFamily::C2: return "C2";
    case ClassFamily::C3: return "C3";
    case ClassFamily::C4: return "C4";
    case ClassFamily::D1: return "D1";
    case ClassFamily::D2: return "D2";
    case ClassFamily::D3: return "D3";
    case ClassFamily::D4: return "D4";
  }
  return "?";
}

unsigned parameter_count(ClassFamily family) {
  switch (family) {
    case ClassFamily::A1:
    case ClassFamily::A2:
    case ClassFamily::A31:
    case ClassFamily::A32:
    case ClassFamily::A41:
    case ClassFamily::A42:
      return 0;
    case ClassFamily::B1:
    case ClassFamily::B3:
    case ClassFamily::B4:
      return 2;
    default:
      return 1;
  }
}

BigInt family_class_count(const FieldSize& fs, ClassFamily family) {
  const BigInt& q = fs.q();
  switch (family) {
    case ClassFamily::B1: return (q - 2) * (q - 4) / 8;
    case ClassFamily::B2:
    case ClassFamily::B3: return q * (q - 2) / 4;
    case ClassFamily::B4: return q * (q - 2) / 8;
    case ClassFamily::B5: return q * q / 4;
    case ClassFamily::C1:
    case ClassFamily::C2:
    case ClassFamily::D1:
    case ClassFamily::D2: return (q - 2) / 2;
    case ClassFamily::C3:
    case ClassFamily::C4:
    case ClassFamily::D3:
    case ClassFamily::D4: return q / 2;
    default: return 1;
  }
}

namespace {

BigInt family_class_length(const FieldSize& fs, ClassFamily family) {
  const BigInt& q = fs.q();
  const BigInt q2 = q * q;
  const BigInt q3 = q2 * q;
  const BigInt q4 = q2 * q2;
  switch (family) {
    case ClassFamily::A1: return 1;
    case ClassFamily::A2:
    case ClassFamily::A31: return q4 - 1;
    case ClassFamily::A32: return (q2 - 1) * (q4 - 1);
    case ClassFamily::A41:
    case ClassFamily::A42: return q2 * (q2 - 1) * (q4 - 1) / 2;
    case ClassFamily::B1: return q4 * (q + 1) * (q + 1) * (q2 + 1);
    case ClassFamily::B2:
    case ClassFamily::B3: return q4 * (q4 - 1);
    case ClassFamily::B4: return q4 * (q - 1) * (q - 1) * (q2 + 1);
    case ClassFamily::B5: return q4 * (q2 - 1) * (q2 - 1);
    case ClassFamily::C1:
    case ClassFamily::C2: return q3 * (q + 1) * (q2 + 1);
    case ClassFamily::C3:
    case ClassFamily::C4: return q3 * (q - 1) * (q2 + 1);
    case ClassFamily::D1:
    case ClassFamily::D2: return q3 * (q + 1) * (q4 - 1);
    case ClassFamily::D3:
    case ClassFamily::D4: return q3 * (q - 1) * (q4 - 1);
  }
  return 0;
}

using u64 = std::uint64_t;

u64 neg(u64 i, u64 m) { return (m - i % m) % m; }

// Least member of {(+-i, +-j), (+-j, +-i)} mod m.
std::pair<u64, u64> canon_pair_swap(u64 i, u64 j, u64 m) {
  std::pair<u64, u64> best{i, j};
  for (u64 a : {i, neg(i, m)}) {
    for (u64 b : {j, neg(j, m)}) {
      best = std::min({best, std::pair{a, b}, std::pair{b, a}});
    }
  }
  return best;
}

// Least member of {(+-i, +-j)} with separate moduli.
std::pair<u64, u64> canon_pair_sign(u64 i, u64 mi, u64 j, u64 mj) {
  std::pair<u64, u64> best{i, j};
  for (u64 a : {i, neg(i, mi)}) {
    for (u64 b : {j, neg(j, mj)}) best = std::min(best, std::pair{a, b});
  }
  return best;
}

// Least member of {+-i, +-qi} mod m.
u64 canon_frobenius(u64 i, u64 q, u64 m) {
  const u64 qi = (q % m) * i % m;
  return std::min({i, neg(i, m), qi, neg(qi, m)});
}

u64 canon_sign(u64 i, u64 m) { return std::min(i, neg(i, m)); }

}  // namespace

std::vector<ClassDescriptor> class_table(const FieldSize& fs) {
  if (fs.degree() > kMaxClassTableDegree) {
    throw std::invalid_argument("class_table is limited to f <= " +
                                std::to_string(kMaxClassTableDegree));
  }
  const u64 q = fs.q().get_ui();
  const u64 qm = q - 1, qp = q + 1, q2m = q * q - 1, q2p = q * q + 1;

  std::vector<ClassDescriptor> out;
  auto emit = [&](ClassFamily fam, std::optional<u64> i, std::optional<u64> j,
                  u64 order, u64 index) {
    out.push_back(ClassDescriptor{fam, i, j, BigInt(order), index,
                                  family_class_length(fs, fam)});
  };

  emit(ClassFamily::A1, {}, {}, 1, 1);
  emit(ClassFamily::A2, {}, {}, 2, 1);
  emit(ClassFamily::A31, {}, {}, 2, 1);
  emit(ClassFamily::A32, {}, {}, 2, 1);
  emit(ClassFamily::A41, {}, {}, 4, 1);
  emit(ClassFamily::A42, {}, {}, 4, 1);

  // B1 over S1 and B4 over S2: pairs of nonzero residues, i != +-j.
  auto torus_pairs = [&](ClassFamily fam, u64 m) {
    u64 index = 0;
    for (u64 i = 1; i < m; ++i) {
      for (u64 j = 1; j < m; ++j) {
        if (j == i || j == neg(i, m)) continue;
        if (canon_pair_swap(i, j, m) != std::pair{i, j}) continue;
        emit(fam, i, j, m / std::gcd(m, std::gcd(i, j)), ++index);
      }
    }
  };
  // B2 over R2 (mod q^2-1, i != +-qi) and B5 over R3 (nonzero mod q^2+1).
  auto frobenius_orbits = [&](ClassFamily fam, u64 m, bool exclude_fixed) {
    u64 index = 0;
    for (u64 i = 0; i < m; ++i) {
      const u64 qi = q * i % m;
      if (exclude_fixed ? (i == qi || i == neg(qi, m)) : i == 0) continue;
      if (canon_frobenius(i, q, m) != i) continue;
      emit(fam, i, {}, m / std::gcd(m, i), ++index);
    }
  };

  torus_pairs(ClassFamily::B1, qm);
  frobenius_orbits(ClassFamily::B2, q2m, true);
  {
    u64 index = 0;
    for (u64 i = 1; i < qm; ++i) {
      for (u64 j = 1; j < qp; ++j) {
        if (canon_pair_sign(i, qm, j, qp) != std::pair{i, j}) continue;
        emit(ClassFamily::B3, i, j, q2m / (std::gcd(qm, i) * std::gcd(qp, j)),
             ++index);
      }
    }
  }
  torus_pairs(ClassFamily::B4, qp);
  frobenius_orbits(ClassFamily::B5, q2p, false);

  auto sign_orbits = [&](ClassFamily fam, u64 m, u64 order_factor) {
    u64 index = 0;
    for (u64 i = 1; i < m; ++i) {
      if (canon_sign(i, m) != i) continue;
      emit(fam, i, {}, order_factor * m / std::gcd(m, i), ++index);
    }
  };
  sign_orbits(ClassFamily::C1, qm, 1);
  sign_orbits(ClassFamily::C2, qm, 1);
  sign_orbits(ClassFamily::C3, qp, 1);
  sign_orbits(ClassFamily::C4, qp, 1);
  sign_orbits(ClassFamily::D1, qm, 2);
  sign_orbits(ClassFamily::D2, qm, 2);
  sign_orbits(ClassFamily::D3, qp, 2);
  sign_orbits(ClassFamily::D4, qp, 2);
  return out;
}

// ---------------------------------------------------------------------

std::string to_string(CountForm form) {
  switch (form) {
    case CountForm::Identity: return "identity";
    case CountForm::Involution: return "involution";
    case CountForm::Four: return "order-4";
    case CountForm::MinusTorus: return "r | q-1";
    case CountForm::PlusTorus: return "r | q+1";
    case CountForm::TwiceMinus: return "r = 2r', r' | q-1";
    case CountForm::TwicePlus: return "r = 2r', r' | q+1";
    case CountForm::Mixed: return "r = r's', r' | q-1, s' | q+1";
    case CountForm::Anisotropic: return "r | q^2+1";
  }
  return "?";
}

CountForm count_form(const FieldSize& fs, const BigInt& r) {
  const BigInt& q = fs.q();
  if (r == 1) return CountForm::Identity;
  if (r == 2) return CountForm::Involution;
  if (r == 4) return CountForm::Four;
  if (r > 1 && mpz_odd_p(r.get_mpz_t())) {
    if ((q * q + 1) % r == 0) return CountForm::Anisotropic;
    if ((q * q - 1) % r == 0) {
      const BigInt minus = gcd(r, BigInt(q - 1));
      const BigInt plus = gcd(r, BigInt(q + 1));
      if (plus == 1) return CountForm::MinusTorus;
      if (minus == 1) return CountForm::PlusTorus;
      return CountForm::Mixed;
    }
  } else if (r > 4) {
    const BigInt half = r / 2;
    if (mpz_odd_p(half.get_mpz_t())) {
      if ((q - 1) % half == 0) return CountForm::TwiceMinus;
      if ((q + 1) % half == 0) return CountForm::TwicePlus;
    }
  }
  throw std::invalid_argument(to_decimal(r) + " is not an element order of "
                              "PSp4(" + to_decimal(q) + ")");
}

BigInt m_of_order(const FieldSize& fs, const BigInt& r) {
  const BigInt& q = fs.q();
  const BigInt q2 = q * q;
  const BigInt q3 = q2 * q;
  const BigInt q4 = q2 * q2;
  auto exact = [&](const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    if (v.get_den() != 1) {
      throw std::logic_error("non-integral element count for r = " +
                             to_decimal(r));
    }
    return BigInt(v.get_num());
  };

  switch (count_form(fs, r)) {
    case CountForm::Identity:
      return 1;
    case CountForm::Involution:
      return (q2 + 1) * (q4 - 1);
    case CountForm::Four:
      return q2 * (q2 - 1) * (q4 - 1);
    case CountForm::MinusTorus:
    case CountForm::PlusTorus: {
      const BigInt eps = count_form(fs, r) == CountForm::MinusTorus ? 1 : -1;
      const BigInt s = q * (q + eps);  // q(q+1) or q(q-1)
      const mpq_class bracket = mpq_class(1) - mpq_class(s, 2) +
                                mpq_class(s * arith::dedekind_psi(r), 8);
      return exact(mpq_class(arith::euler_phi(r) * q3 * (q2 + 1) * (q + eps)) *
                   bracket);
    }
    case CountForm::TwiceMinus:
      return arith::euler_phi(r / 2) * q3 * (q + 1) * (q4 - 1);
    case CountForm::TwicePlus:
      return arith::euler_phi(r / 2) * q3 * (q - 1) * (q4 - 1);
    case CountForm::Mixed:
      return exact(mpq_class(arith::euler_phi(r) * q4 * (q4 - 1), 2));
    case CountForm::Anisotropic:
      return exact(
          mpq_class(arith::euler_phi(r) * q4 * (q2 - 1) * (q2 - 1), 4));
  }
  throw std::logic_error("unreachable count form");
}

NseTable nse_table(const FieldSize& fs) {
  NseTable t{fs.q(), group_order(fs), {}};
  for (const auto& r : spectrum(fs)) t.counts.emplace(r, m_of_order(fs, r));
  return t;
}

std::set<BigInt> nse_set(const NseTable& table) {
  std::set<BigInt> out;
  for (const auto& [order, count] : table.counts) out.insert(count);
  return out;
}

std::set<BigInt> nse_set(const FieldSize& fs) { return nse_set(nse_table(fs)); }

bool phi_divisibility_check(const FieldSize& fs) {
  const BigInt n = fs.q() * fs.q() + 1;
  for (const auto& r : arith::divisors(n)) {
    if (r == 1) continue;
    if (arith::euler_phi(r) % 4 != 0) return false;
  }
  return true;
}

}  // namespace psp4::sympl
