#include "alpharep/congruence.hpp"

#include "alpharep/errors.hpp"

namespace alpharep {

CongruenceReport congruence_report(std::uint64_t alpha, unsigned k, unsigned dim,
                                   std::string context)
{
  if (alpha == 0)
    throw InvalidArgument("alpha must be positive");
  if (k == 0)
    throw InvalidArgument("homogeneity degree must be positive");
  CongruenceReport r;
  r.alpha = alpha;
  r.k = k;
  r.dim = dim;
  r.context = std::move(context);
  r.reference_degree = boost::multiprecision::pow(Integer(k), dim);
  r.residue = static_cast<std::uint64_t>(r.reference_degree % Integer(alpha));
  r.informative = alpha > 1;
  std::string deg = r.reference_degree.str();
  std::string mod = " (mod " + std::to_string(alpha) + ")";
  if (!r.informative)
    r.statement = "deg ≡ 0" + mod + ": no information";
  else if (deg == std::to_string(r.residue))
    r.statement = "deg ≡ " + deg + mod;
  else
    r.statement = "deg ≡ " + deg + " ≡ " + std::to_string(r.residue) + mod;
  return r;
}

} // namespace alpharep
