#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sfcplace/model.hpp"
#include "sfcplace/rational.hpp"

namespace sfcplace {

// Families of decision variables.
//   X[v,u]          VNF v uses VNFI u
//   B[s,u]          SFC s touches VNFI u
//   Yc[v,c]         VNF v is hosted at cloud c
//   A[u,t]          VNFI u has type t (t is 1-based)
//   U[u,c]          VNFI u is deployed at cloud c
//   Phi[u,f]        VNFI u uses flavor f
//   Yvuc[v,u,c]     X[v,u] * U[u,c]
//   Cucf[u,c,f]     U[u,c] * Phi[u,f]
//   Ypair[k,c1,c2]  Yc[v1,c1] * Yc[v2,c2] for chain pair k = (v1, v2), c1 != c2
//   Fhop[k]         hop delay of chain pair k, continuous, ms
enum class VarKind : std::uint8_t { X, B, Yc, A, U, Phi, Yvuc, Cucf, Ypair, Fhop };

const char* to_string(VarKind kind);

struct VarInfo {
  VarKind kind;
  std::array<int, 3> idx;  // unused slots are -1
  bool continuous = false;
};

// Consecutive VNFs (global indices) of one SFC.
struct ChainPair {
  int sfc = 0;
  int first = 0;
  int second = 0;
};

struct ModelDims {
  int vnfs = 0;
  int vnfis = 0;
  int sfcs = 0;
  int clouds = 0;
  int flavors = 0;
  int types = 0;
  std::vector<ChainPair> pairs;

  std::size_t x_count() const { return static_cast<std::size_t>(vnfs) * vnfis; }
  std::size_t ypair_count() const {
    return pairs.size() * static_cast<std::size_t>(clouds) * (clouds > 0 ? clouds - 1 : 0);
  }
};

// Every variable of the model with a stable dense index. Kinds occupy
// contiguous index ranges in VarKind order.
class VarRegistry {
 public:
  VarRegistry() = default;
  explicit VarRegistry(ModelDims dims);

  const ModelDims& dims() const { return dims_; }
  std::size_t size() const { return info_.size(); }
  const VarInfo& info(int var) const { return info_.at(static_cast<std::size_t>(var)); }
  // LP-safe name such as "X_3_5" or "Ypair_0_1_2".
  std::string name(int var) const;
  int find(const std::string& name) const;  // -1 when unknown

  std::size_t count(VarKind kind) const;
  int first(VarKind kind) const { return base_[static_cast<std::size_t>(kind)]; }

  int x(int v, int u) const { return base(VarKind::X) + v * dims_.vnfis + u; }
  int b(int s, int u) const { return base(VarKind::B) + s * dims_.vnfis + u; }
  int yc(int v, int c) const { return base(VarKind::Yc) + v * dims_.clouds + c; }
  int a(int u, int type) const { return base(VarKind::A) + u * dims_.types + (type - 1); }
  int u(int u, int c) const { return base(VarKind::U) + u * dims_.clouds + c; }
  int phi(int u, int f) const { return base(VarKind::Phi) + u * dims_.flavors + f; }
  int yvuc(int v, int u, int c) const {
    return base(VarKind::Yvuc) + (v * dims_.vnfis + u) * dims_.clouds + c;
  }
  int cucf(int u, int c, int f) const {
    return base(VarKind::Cucf) + (u * dims_.clouds + c) * dims_.flavors + f;
  }
  int ypair(int k, int c1, int c2) const {
    const int slot = c1 * (dims_.clouds - 1) + (c2 < c1 ? c2 : c2 - 1);
    return base(VarKind::Ypair) + k * dims_.clouds * (dims_.clouds - 1) + slot;
  }
  int fhop(int k) const { return base(VarKind::Fhop) + k; }

 private:
  int base(VarKind kind) const { return base_[static_cast<std::size_t>(kind)]; }

  ModelDims dims_;
  std::array<int, 11> base_{};
  std::vector<VarInfo> info_;
  std::map<std::string, int> by_name_;
};

enum class Sense : std::uint8_t { LessEqual, Equal, GreaterEqual };

const char* to_string(Sense sense);

struct Term {
  Rational coeff;
  int var = 0;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Sense sense = Sense::LessEqual;
  Rational rhs;
  // Source family: "eq1", ..., "hopdef", "conflict", or "ext-*".
  std::string tag;
};

struct BuildOptions {
  bool symmetry_breaking = true;
  bool bandwidth = false;  // ext-bandwidth
  bool endpoints = false;  // ext-endpoints
};

// Domain facts the exact solver uses for bounding and incumbents. Not part
// of the linear program itself.
struct ModelLayout {
  // Type each pool VNFI is reserved for when symmetry breaking is on.
  std::vector<int> vnfi_block_type;
  // Minimum number of VNFIs any feasible placement opens for each type
  // (index 0 unused): a clique bound over "cannot share" pairs.
  std::vector<int> min_vnfis_per_type;
};

struct IlpModel {
  VarRegistry vars;
  std::vector<LinearConstraint> constraints;
  std::vector<Term> objective;  // minimized
  // Total chain delay; used as the tie-break objective among cost optima.
  std::vector<Term> delay_objective;
  BuildOptions options;
  ModelLayout layout;
  std::shared_ptr<const Scenario> scenario;

  std::size_t count_tag(const std::string& tag) const;
};

// Thrown when a constraint references a variable outside the registry.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

IlpModel build_model(const Scenario& scenario, const BuildOptions& options = {});

// Individual constraint families; build_model calls all of them.
void emit_vnf_vnfi_constraints(IlpModel& model, const Scenario& scenario);
void emit_vnfi_cloud_constraints(IlpModel& model, const Scenario& scenario);
void emit_resource_constraints(IlpModel& model, const Scenario& scenario);
void emit_delay_constraints(IlpModel& model, const Scenario& scenario);
void emit_security_constraints(IlpModel& model, const Scenario& scenario);
void emit_extension_constraints(IlpModel& model, const Scenario& scenario);
void emit_objective(IlpModel& model, const Scenario& scenario);

void check_integrity(const IlpModel& model);

// Evaluates sum(coeff * value) over a full assignment.
Rational evaluate(const std::vector<Term>& terms, const std::vector<Rational>& values);
bool satisfied(const LinearConstraint& row, const std::vector<Rational>& values);

// Tags of the base formulation, in emission order. A scenario with
// conflicts, several types, flavors and clouds and at least one chain pair
// produces every one of them.
const std::vector<std::string>& base_tags();

// Consecutive pairs of every chain in SFC order.
std::vector<ChainPair> chain_pairs(const Scenario& scenario);

}  // namespace sfcplace
