#pragma once

#include <optional>

#include "gpi/budget.hpp"
#include "gpi/envelope.hpp"

namespace gpi {

struct TupleCount {
  DegreeTuple tuple;
  long c = 0;
  long cz = 0;
  long cdelta = 0;
};

struct CodimReport {
  int n = 0;
  std::vector<TupleCount> tuples;  // support tuples, lexicographic
  long c = 0;
  long cz = 0;
  long cdelta = 0;
  long pruned_tuples = 0;  // tuples with an empty homogeneous component
};

// Extra substitution elements allowed besides the basis (must be homogeneous
// of pure parity). Positions whose G-degree matches `gdeg` also range over
// `element`.
struct ExtraSubstitution {
  GroupElement gdeg;
  int parity = 0;
  RatVec element;
};

PolySubspace identity_kernel(const EnvelopeContext& ctx, const DegreeTuple& tuple,
                             const std::vector<ExtraSubstitution>& extra = {});
PolySubspace central_kernel(const EnvelopeContext& ctx, const DegreeTuple& tuple,
                            const std::vector<ExtraSubstitution>& extra = {});

CodimReport codim_for_n(const EnvelopeContext& ctx, int n, int jobs = 1,
                        const BudgetGuard& guard = {});

// Exact reports for 1 <= n <= n_max. Refuses (BudgetError) when the degree
// exceeds the hard cap or the estimated matrix volume is out of budget;
// nothing partial is returned.
std::vector<CodimReport> codim_sequence(const EnvelopeContext& ctx, int n_max, int jobs = 1,
                                        const BudgetGuard& guard = {});

enum class CentralClass { Identity, ProperCentral, NotCentral };

bool is_identity(const EnvelopeContext& ctx, const GradedPoly& f);
CentralClass classify_poly(const EnvelopeContext& ctx, const GradedPoly& f);

const char* central_class_name(CentralClass c);

}  // namespace gpi
