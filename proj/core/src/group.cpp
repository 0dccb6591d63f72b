#include "qgzeta/group.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qgz {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    std::vector<std::vector<int>> table) {
  int n = static_cast<int>(names.size());
  if (n == 0) throw InputError("group must have at least the identity");
  if (static_cast<int>(table.size()) != n)
    throw InputError("group table has wrong number of rows");
  std::set<std::string> seen(names.begin(), names.end());
  if (static_cast<int>(seen.size()) != n) throw InputError("duplicate group element names");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table row has wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw InputError("group table entry out of range");
  }
  // Identity at index 0.
  for (int g = 0; g < n; ++g)
    if (table[0][g] != g || table[g][0] != g)
      throw InputError("element 0 must be the identity");
  // Latin square: rows and columns are permutations.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      if (row[table[a][b]]) throw InputError("group table row is not a permutation");
      row[table[a][b]] = true;
      if (col[table[b][a]]) throw InputError("group table column is not a permutation");
      col[table[b][a]] = true;
    }
  }
  // Associativity; n stays small so the cubic check is fine.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("group table is not associative");

  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] == 0) g.inverse_[a] = b;
  g.abelian_ = true;
  for (int a = 0; a < n && g.abelian_; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] != g.table_[b][a]) {
        g.abelian_ = false;
        break;
      }
  return g;
}

int FiniteGroup::op(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size()) throw InputError("group element out of range");
  return table_[a][b];
}

int FiniteGroup::inverse(int g) const {
  if (g < 0 || g >= size()) throw InputError("group element out of range");
  return inverse_[g];
}

int FiniteGroup::power(int g, int e) const {
  if (e < 0) throw InputError("power expects a non-negative exponent");
  int acc = 0;
  for (int i = 0; i < e; ++i) acc = op(acc, g);
  return acc;
}

int FiniteGroup::order_of(int g) const {
  int acc = g, ord = 1;
  while (acc != 0) {
    acc = op(acc, g);
    ++ord;
  }
  return ord;
}

const std::string& FiniteGroup::name(int g) const {
  if (g < 0 || g >= size()) throw InputError("group element out of range");
  return names_[g];
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be >= 1");
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(names), std::move(table)));
}

GroupPtr product_group(const std::vector<int>& orders) {
  if (orders.empty()) throw InputError("product group needs at least one factor");
  long long total = 1;
  for (int o : orders) {
    if (o < 1) throw InputError("cyclic factor order must be >= 1");
    total *= o;
    if (total > 4096) throw InputError("product group order too large");
  }
  int n = static_cast<int>(total);
  int r = static_cast<int>(orders.size());
  auto decode = [&](int idx) {
    std::vector<int> t(r);
    for (int i = r - 1; i >= 0; --i) {
      t[i] = idx % orders[i];
      idx /= orders[i];
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int idx = 0;
    for (int i = 0; i < r; ++i) idx = idx * orders[i] + t[i];
    return idx;
  };
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    std::vector<int> ta = decode(a);
    std::string nm;
    for (int i = 0; i < r; ++i) {
      if (i) nm += ",";
      nm += std::to_string(ta[i]);
    }
    names[a] = nm;
    for (int b = 0; b < n; ++b) {
      std::vector<int> tb = decode(b), tc(r);
      for (int i = 0; i < r; ++i) tc[i] = (ta[i] + tb[i]) % orders[i];
      table[a][b] = encode(tc);
    }
  }
  return std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(names), std::move(table)));
}

RepValidation validate_representation(const Representation& rep) {
  RepValidation out;
  if (!rep.group) {
    out.detail = "representation has no group";
    return out;
  }
  const FiniteGroup& g = *rep.group;
  if (static_cast<int>(rep.matrices.size()) != g.size()) {
    out.detail = "matrix count differs from group order";
    return out;
  }
  if (rep.degree < 1) {
    out.detail = "degree must be >= 1";
    return out;
  }
  for (const auto& m : rep.matrices)
    if (m.rows() != rep.degree || m.cols() != rep.degree) {
      out.detail = "matrix dimensions differ from degree";
      return out;
    }

  ComplexMatrix id = ComplexMatrix::identity(rep.degree);
  auto note = [&](double dev, const std::string& what) {
    if (dev > out.worst) {
      out.worst = dev;
      out.detail = what;
    }
  };
  note(max_abs_diff(rep.matrices[0], id), "identity image");
  for (int a = 0; a < g.size(); ++a) {
    note(max_abs_diff(rep.matrices[a] * rep.matrices[a].adjoint(), id),
         "unitarity at element " + g.name(a));
    for (int b = 0; b < g.size(); ++b)
      note(max_abs_diff(rep.matrices[a] * rep.matrices[b], rep.matrices[g.op(a, b)]),
           "homomorphism at pair (" + g.name(a) + ", " + g.name(b) + ")");
  }
  out.pass = out.worst <= 1e-10;
  if (out.pass && out.detail.empty()) out.detail = "ok";
  return out;
}

Representation trivial_representation(const GroupPtr& group) {
  Representation rep;
  rep.group = group;
  rep.name = "chi0";
  rep.degree = 1;
  rep.matrices.assign(group->size(), ComplexMatrix::identity(1));
  return rep;
}

IrrepSet characters_abelian(const GroupPtr& group) {
  if (!group) throw InputError("characters_abelian: null group");
  const FiniteGroup& g = *group;
  if (!g.abelian()) throw InputError("characters_abelian requires an abelian group");
  int n = g.size();

  // Character values on the subgroup built so far; grown by extending along
  // a chain of cyclic steps. in_sub marks subgroup membership.
  std::vector<std::vector<cplx>> chars = {std::vector<cplx>(n, cplx(0.0, 0.0))};
  chars[0][0] = 1.0;
  std::vector<bool> in_sub(n, false);
  in_sub[0] = true;
  std::vector<int> members = {0};

  while (static_cast<int>(members.size()) < n) {
    int gen = 0;
    while (in_sub[gen]) ++gen;
    int q = 1, p = gen;
    while (!in_sub[p]) {
      p = g.op(p, gen);
      ++q;
    }
    // p = gen^q is the first power landing in the current subgroup.
    std::vector<std::vector<cplx>> next;
    next.reserve(chars.size() * q);
    for (const auto& chi : chars) {
      cplx base = chi[p];
      double arg0 = std::arg(base);
      for (int t = 0; t < q; ++t) {
        double th = (arg0 + 2.0 * pi * t) / q;
        cplx zeta = cplx(std::cos(th), std::sin(th));
        std::vector<cplx> ext(n, cplx(0.0, 0.0));
        cplx zj = 1.0;
        int gj = 0;
        for (int j = 0; j < q; ++j) {
          for (int w : members) ext[g.op(gj, w)] = zj * chi[w];
          zj *= zeta;
          gj = g.op(gj, gen);
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    std::vector<int> grown;
    int gj = 0;
    for (int j = 0; j < q; ++j) {
      for (int w : members) {
        int e = g.op(gj, w);
        grown.push_back(e);
        in_sub[e] = true;
      }
      gj = g.op(gj, gen);
    }
    members = std::move(grown);
  }

  IrrepSet set;
  for (size_t i = 0; i < chars.size(); ++i) {
    Representation rep;
    rep.group = group;
    rep.name = "chi" + std::to_string(i);
    rep.degree = 1;
    rep.matrices.reserve(n);
    for (int e = 0; e < n; ++e) {
      ComplexMatrix m(1, 1);
      m(0, 0) = chars[i][e];
      rep.matrices.push_back(std::move(m));
    }
    set.reps.push_back(std::move(rep));
  }
  return set;
}

void validate_irrep_set(const IrrepSet& set, const FiniteGroup& group) {
  if (set.reps.empty()) throw InputError("irrep set is empty");
  long long sum_sq = 0;
  for (const auto& rep : set.reps) {
    RepValidation v = validate_representation(rep);
    if (!v.pass)
      throw InputError("irrep set member " + rep.name + " invalid: " + v.detail);
    sum_sq += static_cast<long long>(rep.degree) * rep.degree;
  }
  if (sum_sq != group.size())
    throw InputError("irrep set incomplete: degrees squared sum to " +
                     std::to_string(sum_sq) + ", group order is " +
                     std::to_string(group.size()));
  const Representation& first = set.reps[0];
  if (first.degree != 1 || std::abs(first.character(0) - cplx(1.0, 0.0)) > 1e-10)
    throw InputError("first irrep must be trivial");
  for (int g = 0; g < group.size(); ++g)
    if (std::abs(first.character(g) - cplx(1.0, 0.0)) > 1e-10)
      throw InputError("first irrep must be trivial");
  // Character orthonormality.
  for (size_t i = 0; i < set.reps.size(); ++i)
    for (size_t j = i; j < set.reps.size(); ++j) {
      cplx acc = 0.0;
      for (int g = 0; g < group.size(); ++g)
        acc += set.reps[i].character(g) * std::conj(set.reps[j].character(g));
      acc /= static_cast<double>(group.size());
      cplx want = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      if (std::abs(acc - want) > 1e-8)
        throw InputError("irrep characters " + set.reps[i].name + ", " + set.reps[j].name +
                         " are not orthonormal");
    }
}

}  // namespace qgz
