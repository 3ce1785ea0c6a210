#include "semicover/cover_pair.hpp"

namespace semicover {

bool CoverFlags::all_verified() const {
  return closed_a.ok() && closed_b.ok() && covers.ok() && proper_a.ok() && proper_b.ok() &&
         trivial_intersection.ok() && inverse_duality.ok();
}

Verdict inverse_duality(const ConeSet& a, const ConeSet& b, const Ball& domain) {
  const GroupModel& m = a.model();
  for (const auto& x : domain) {
    if (m.is_identity(x)) continue;
    const Element xi = m.inv(x);
    // x^-1 in B - H  <=>  x^-1 in B and x not in B
    if (a.contains(x) && !(b.contains(xi) && !b.contains(x))) {
      return Verdict::fail(domain, {x}, "inverse of an A-element is not in B-H");
    }
    if (b.contains(x) && !b.contains(xi) && !a.contains(xi)) {
      return Verdict::fail(domain, {x}, "inverse of a (B-H)-element is not in A-{1}");
    }
  }
  return Verdict::pass(domain);
}

CoverPair make_cover_pair(ModelPtr model, ConeSet a, ConeSet b, int radius) {
  const CoverCheck check = is_cover_pair(*model, a, b, radius, true);
  const Ball domain = verification_domain(*model, radius);
  CoverFlags flags{check.closed_a, check.closed_b,           check.covers, check.proper_a,
                   check.proper_b, *check.trivial_intersection, inverse_duality(a, b, domain)};
  return CoverPair{std::move(model), std::move(a), std::move(b), std::move(flags), radius};
}

}  // namespace semicover
