#include "qhsing/catalog.hpp"

namespace qhsing {

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {Family::A, 1, false, ""},
      {Family::D, 4, false, ""},
      {Family::E6, 0, false, ""},
      {Family::E7, 0, false, ""},
      {Family::E8, 0, false, ""},
      {Family::P8, 0, true, "a^3 + 27 != 0"},
      {Family::X9, 0, true, "a^2 != 4"},
      {Family::J10, 0, true, "4*a^3 + 27 != 0"},
  };
  return entries;
}

int catalog_min_n(Family f) { return f == Family::P8 ? 2 : 1; }

namespace {

Monomial power_of(int nvars, int var, int exp) {
  Monomial m{std::vector<int>(nvars, 0)};
  m.k[var] = exp;
  return m;
}

/// z_{first+1}^2 + ... + z_{nvars}^2 appended to p.
void add_squares(Poly& p, int first) {
  for (int i = first; i < p.nvars(); ++i) {
    p.add_term(power_of(p.nvars(), i, 2), 1);
  }
}

void check_k(const TypeTag& tag) {
  if (tag.family == Family::A) {
    if (!tag.k || *tag.k < 1) {
      throw Error(errc::out_of_range, "A_k requires k >= 1");
    }
  } else if (tag.family == Family::D) {
    if (!tag.k || *tag.k < 4) {
      throw Error(errc::out_of_range, "D_k requires k >= 4");
    }
  } else if (tag.k) {
    throw Error(errc::out_of_range,
                family_name(tag.family) + " takes no k parameter");
  }
}

}  // namespace

Poly catalog_normal_form(const TypeTag& tag, int n,
                         const std::optional<Rat>& modulus) {
  check_k(tag);
  if (n < catalog_min_n(tag.family)) {
    throw Error(errc::out_of_range,
                family_name(tag.family) + " needs n >= " +
                    std::to_string(catalog_min_n(tag.family)));
  }
  const int nv = n + 1;
  Rat a = modulus.value_or(Rat(0));
  if (modulus && tag.family != Family::P8 && tag.family != Family::X9 &&
      tag.family != Family::J10) {
    throw Error(errc::out_of_range,
                family_name(tag.family) + " has no modulus parameter");
  }

  Poly p(nv);
  switch (tag.family) {
    case Family::A:
      p.add_term(power_of(nv, 0, *tag.k + 1), 1);
      add_squares(p, 1);
      break;
    case Family::D:
      p.add_term(Monomial{[&] {
                   std::vector<int> k(nv, 0);
                   k[0] = 2;
                   k[1] = 1;
                   return k;
                 }()},
                 1);
      p.add_term(power_of(nv, 1, *tag.k - 1), 1);
      add_squares(p, 2);
      break;
    case Family::E6:
      p.add_term(power_of(nv, 0, 3), 1);
      p.add_term(power_of(nv, 1, 4), 1);
      add_squares(p, 2);
      break;
    case Family::E7:
      p.add_term(power_of(nv, 0, 3), 1);
      p.add_term(Monomial{[&] {
                   std::vector<int> k(nv, 0);
                   k[0] = 1;
                   k[1] = 3;
                   return k;
                 }()},
                 1);
      add_squares(p, 2);
      break;
    case Family::E8:
      p.add_term(power_of(nv, 0, 3), 1);
      p.add_term(power_of(nv, 1, 5), 1);
      add_squares(p, 2);
      break;
    case Family::P8: {
      if (a * a * a + 27 == 0) {
        throw Error(errc::forbidden_modulus,
                    "P8 modulus must satisfy a^3 + 27 != 0");
      }
      p.add_term(power_of(nv, 0, 3), 1);
      p.add_term(power_of(nv, 1, 3), 1);
      p.add_term(power_of(nv, 2, 3), 1);
      if (a != 0) {
        p.add_term(Monomial{[&] {
                     std::vector<int> k(nv, 0);
                     k[0] = k[1] = k[2] = 1;
                     return k;
                   }()},
                   a);
      }
      add_squares(p, 3);
      break;
    }
    case Family::X9: {
      if (a * a == 4) {
        throw Error(errc::forbidden_modulus, "X9 modulus must satisfy a^2 != 4");
      }
      p.add_term(power_of(nv, 0, 4), 1);
      p.add_term(power_of(nv, 1, 4), 1);
      if (a != 0) {
        p.add_term(Monomial{[&] {
                     std::vector<int> k(nv, 0);
                     k[0] = k[1] = 2;
                     return k;
                   }()},
                   a);
      }
      add_squares(p, 2);
      break;
    }
    case Family::J10: {
      if (4 * a * a * a + 27 == 0) {
        throw Error(errc::forbidden_modulus,
                    "J10 modulus must satisfy 4*a^3 + 27 != 0");
      }
      p.add_term(power_of(nv, 0, 3), 1);
      p.add_term(power_of(nv, 1, 6), 1);
      if (a != 0) {
        p.add_term(Monomial{[&] {
                     std::vector<int> k(nv, 0);
                     k[0] = k[1] = 2;
                     return k;
                   }()},
                   a);
      }
      add_squares(p, 2);
      break;
    }
    case Family::Unknown:
      throw Error(errc::out_of_range, "no normal form for Unknown");
  }
  return p;
}

std::vector<Rat> catalog_weights(const TypeTag& tag, int n) {
  check_k(tag);
  if (n < catalog_min_n(tag.family)) {
    throw Error(errc::out_of_range,
                family_name(tag.family) + " needs n >= " +
                    std::to_string(catalog_min_n(tag.family)));
  }
  std::vector<Rat> head;
  switch (tag.family) {
    case Family::A: head = {Rat(1, *tag.k + 1)}; break;
    case Family::D:
      head = {Rat(*tag.k - 2, 2 * *tag.k - 2), Rat(1, *tag.k - 1)};
      break;
    case Family::E6: head = {Rat(1, 3), Rat(1, 4)}; break;
    case Family::E7: head = {Rat(1, 3), Rat(2, 9)}; break;
    case Family::E8: head = {Rat(1, 3), Rat(1, 5)}; break;
    case Family::P8: head = {Rat(1, 3), Rat(1, 3), Rat(1, 3)}; break;
    case Family::X9: head = {Rat(1, 4), Rat(1, 4)}; break;
    case Family::J10: head = {Rat(1, 3), Rat(1, 6)}; break;
    case Family::Unknown:
      throw Error(errc::out_of_range, "no weights for Unknown");
  }
  head.resize(n + 1, Rat(1, 2));
  return head;
}

Rat catalog_kappa(const TypeTag& tag, int n) {
  check_k(tag);
  Rat half_n = Rat(n, 2);
  switch (tag.family) {
    case Family::A: return half_n + Rat(1, *tag.k + 1);
    case Family::D: return half_n + Rat(1, 2 * (*tag.k - 1));
    case Family::E6: return half_n + Rat(1, 12);
    case Family::E7: return half_n + Rat(1, 18);
    case Family::E8: return half_n + Rat(1, 30);
    case Family::P8:
    case Family::X9:
    case Family::J10: return half_n;
    case Family::Unknown: break;
  }
  throw Error(errc::out_of_range, "no kappa for Unknown");
}

Int catalog_mu(const TypeTag& tag) {
  check_k(tag);
  switch (tag.family) {
    case Family::A:
    case Family::D: return *tag.k;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::P8: return 8;
    case Family::X9: return 9;
    case Family::J10: return 10;
    case Family::Unknown: break;
  }
  throw Error(errc::out_of_range, "no mu for Unknown");
}

}  // namespace qhsing
