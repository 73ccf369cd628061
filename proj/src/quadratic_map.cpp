#include "alpharep/quadratic_map.hpp"

#include <random>

#include "alpharep/errors.hpp"
#include "alpharep/norton.hpp"

namespace alpharep {

namespace {

std::vector<Polynomial> delta_monomials(std::size_t d)
{
  std::vector<Polynomial> out;
  for (auto [i, j] : sym_basis(d)) {
    Monomial m(d, 0);
    ++m[i];
    ++m[j];
    out.push_back(Polynomial::monomial(m, 1));
  }
  return out;
}

std::vector<Polynomial> components_from(const MatQ &coef, std::size_t d)
{
  auto delta = delta_monomials(d);
  std::vector<Polynomial> out;
  for (Eigen::Index k = 0; k < coef.rows(); ++k) {
    Polynomial p(d);
    for (Eigen::Index m = 0; m < coef.cols(); ++m)
      if (coef(k, m) != 0)
        p += coef(k, m) * delta[static_cast<std::size_t>(m)];
    out.push_back(std::move(p));
  }
  return out;
}

// Left inverse of a full-column-rank basis.
MatQ left_inverse(const MatQ &b)
{
  MatQ bt = b.transpose();
  auto g = inverse<Rational>(MatQ(bt * b));
  if (!g)
    throw InvalidArgument("basis columns are dependent");
  return *g * bt;
}

void fill_target_action(QuadraticMap &phi, const MatQ &left)
{
  phi.target_generators.clear();
  MatC l = to_cyclotomic(left), b = to_cyclotomic(phi.image_basis);
  for (const auto &m : phi.source.generators)
    phi.target_generators.push_back(l * sym_square_matrix(m) * b);
}

} // namespace

QuadraticMap quad_map_build(const MatrixRep &source, const ClassFunction &target,
                            const TablePtr &t)
{
  if (target.table() != t)
    throw InvalidArgument("target character belongs to another table");
  ClassFunction chi = rep_character(source, t);
  ClassFunction u = sym_square(chi);
  auto mult = decompose(target);
  QuadraticMap phi;
  phi.source = source;
  phi.source_dim = source.dim;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] < 0)
      throw InvalidArgument("target is not a character");
    if (mult[i] == 0)
      continue;
    if (inner_product(u, t->irreducible(i)) < 1)
      throw InvalidArgument("constituent chi_" + std::to_string(i) +
                            " does not occur in Sym^2 of the source");
    phi.constituents.push_back(i);
  }

  auto elems = enumerate_rep(source);
  std::vector<Permutation> perms;
  for (const auto &e : elems)
    perms.push_back(e.g);
  auto cols = t->locator->locate(perms);
  auto sd = static_cast<Eigen::Index>(source.dim * (source.dim + 1) / 2);
  std::vector<MatC> class_sum(t->class_count(), MatC::Zero(sd, sd));
  for (std::size_t i = 0; i < elems.size(); ++i)
    class_sum[cols[i]] += sym_square_matrix(elems[i].m);

  MatC a = MatC::Zero(sd, sd);
  Cyclotomic order(Rational(Integer(t->order)));
  for (auto i : phi.constituents) {
    const auto &psi = t->irreducible(i);
    for (std::size_t c = 0; c < t->class_count(); ++c)
      if (!psi[c].is_zero())
        a += (psi.degree() * conj(psi[c]) / order) * class_sum[c];
  }
  try {
    phi.projection = to_rational(a);
  } catch (const DataError &e) {
    throw DataError(std::string("projection is not rational: ") + e.what());
  }

  auto e = rref<Rational>(MatQ(phi.projection.transpose()));
  auto r = static_cast<Eigen::Index>(e.pivots.size());
  phi.target_dim = e.pivots.size();
  phi.image_basis = e.matrix.topRows(r).transpose();
  phi.coefficients = MatQ(r, sd);
  for (Eigen::Index k = 0; k < r; ++k)
    phi.coefficients.row(k) = phi.projection.row(e.pivots[static_cast<std::size_t>(k)]);
  phi.components = components_from(phi.coefficients, source.dim);
  MatQ left = left_inverse(phi.image_basis);
  fill_target_action(phi, left);
  return phi;
}

QuadraticMap with_basis(const QuadraticMap &phi, const MatQ &basis)
{
  if (basis.rows() != phi.projection.rows() ||
      basis.cols() != static_cast<Eigen::Index>(phi.target_dim))
    throw InvalidArgument("basis has wrong shape");
  if (rank<Rational>(basis) != basis.cols() || phi.projection * basis != basis)
    throw InvalidArgument("columns are not a basis of the image");
  QuadraticMap out = phi;
  out.image_basis = basis;
  MatQ left = left_inverse(basis);
  out.coefficients = left * phi.projection;
  out.components = components_from(out.coefficients, phi.source_dim);
  fill_target_action(out, left);
  return out;
}

ProjectionCheck check_projection(const QuadraticMap &phi, std::int64_t expected_trace)
{
  ProjectionCheck r;
  const MatQ &a = phi.projection;
  r.idempotent = a * a == a;
  r.commutes = true;
  MatC ac = to_cyclotomic(a);
  for (const auto &m : phi.source.generators) {
    MatC s = sym_square_matrix(m);
    if (ac * s != s * ac)
      r.commutes = false;
  }
  r.trace = a.trace();
  r.ok = r.idempotent && r.commutes && r.trace == Rational(expected_trace);
  return r;
}

Polynomial substitute_linear(const Polynomial &p, const MatQ &m)
{
  std::size_t d = p.nvars();
  if (static_cast<std::size_t>(m.rows()) != d || static_cast<std::size_t>(m.cols()) != d)
    throw InvalidArgument("substitution matrix has wrong shape");
  std::vector<Polynomial> lin;
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial l(d);
    for (std::size_t j = 0; j < d; ++j)
      if (m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != 0)
        l += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
             Polynomial::variable(d, j);
    lin.push_back(std::move(l));
  }
  Polynomial out(d);
  for (const auto &[mono, c] : p.terms()) {
    Polynomial t = Polynomial::constant(d, c);
    for (std::size_t i = 0; i < d; ++i)
      for (unsigned e = 0; e < mono[i]; ++e)
        t = t * lin[i];
    out += t;
  }
  return out;
}

EquivarianceCheck check_equivariance(const QuadraticMap &phi)
{
  EquivarianceCheck r;
  if (phi.target_generators.size() != phi.source.generators.size()) {
    r.route = "coefficients";
    r.per_generator.assign(phi.source.generators.size(), false);
    return r;
  }
  bool rational = phi.source.rational();
  for (const auto &t : phi.target_generators)
    for (Eigen::Index i = 0; i < t.rows(); ++i)
      for (Eigen::Index j = 0; j < t.cols(); ++j)
        if (!t(i, j).is_rational())
          rational = false;
  r.route = rational ? "substitution" : "coefficients";
  r.ok = true;
  for (std::size_t g = 0; g < phi.source.generators.size(); ++g) {
    bool ok = true;
    if (rational) {
      MatQ m = to_rational(phi.source.generators[g]);
      MatQ t = to_rational(phi.target_generators[g]);
      for (std::size_t k = 0; k < phi.components.size(); ++k) {
        Polynomial lhs = substitute_linear(phi.components[k], m);
        Polynomial rhs(phi.source_dim);
        for (std::size_t l = 0; l < phi.components.size(); ++l)
          rhs += t(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) *
                 phi.components[l];
        if (!(lhs == rhs))
          ok = false;
      }
    } else {
      // Delta components are distinct monomials, so this is the same identity.
      MatC c = to_cyclotomic(phi.coefficients);
      ok = c * sym_square_matrix(phi.source.generators[g]) == phi.target_generators[g] * c;
    }
    r.per_generator.push_back(ok);
    r.ok = r.ok && ok;
  }
  return r;
}

Admissibility admissibility_check(const std::vector<Polynomial> &components)
{
  Admissibility r;
  if (components.empty())
    return r;
  r.admissible = true;
  for (std::size_t k = 0; k < components.front().nvars(); ++k) {
    auto basis = buchberger(dehomogenize(components, k));
    bool unit = basis.polys.size() == 1 && basis.polys.front().is_constant() &&
                !basis.polys.front().is_zero();
    r.admissible = r.admissible && unit;
    r.certificates.push_back(std::move(basis));
  }
  return r;
}

Admissibility admissibility_check(const QuadraticMap &phi)
{
  for (const auto &p : phi.components)
    if (!p.is_zero())
      return admissibility_check(phi.components);
  return {}; // the zero map vanishes everywhere
}

VminusReduction reduce_Vminus_to_V(std::size_t n, unsigned seed)
{
  if (n < 3)
    throw InvalidArgument("reduction needs n >= 3");
  VminusReduction r;
  r.n = n;
  MatrixRep v = augmentation_rep(n, false), vm = augmentation_rep(n, true);
  const auto &gens = v.group.generators();
  r.signs_match_parity = true;
  r.sym_squares_equal = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int s = 0;
    if (vm.generators[i] == v.generators[i])
      s = 1;
    else if (vm.generators[i] == MatC(-v.generators[i]))
      s = -1;
    r.generator_signs.push_back(s);
    if (s != gens[i].sign())
      r.signs_match_parity = false;
    if (sym_square_matrix(vm.generators[i]) != sym_square_matrix(v.generators[i]))
      r.sym_squares_equal = false;
  }

  // The Norton square is S_n-equivariant on V; check it on V- at random points.
  NortonAlgebra a = norton_build(n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  r.spot_check = true;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rational> z(n);
    Rational s = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      z[i] = Rational(dist(rng), dist(rng) == 0 ? 1 : std::abs(dist(rng)) + 1);
      s += z[i];
    }
    z[n - 1] = -s;
    auto phi_z = norton_product(a, z, z);
    for (const auto &g : gens) {
      std::vector<Rational> gz(n), gphi(n);
      for (std::size_t i = 0; i < n; ++i) {
        gz[g(static_cast<Permutation::Point>(i))] = Rational(g.sign()) * z[i];
        gphi[g(static_cast<Permutation::Point>(i))] = phi_z[i];
      }
      if (norton_product(a, gz, gz) != gphi)
        r.spot_check = false;
    }
  }
  r.ok = r.signs_match_parity && r.sym_squares_equal && r.spot_check;
  return r;
}

} // namespace alpharep
