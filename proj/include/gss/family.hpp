#pragma once

#include <optional>
#include <string>
#include <variant>

#include "surface_jet.hpp"
#include "surfaces.hpp"

namespace gss {

// Tagged description of a built-in surface family and its parameters.
using FamilySpec = std::variant<PlaneSpec, CaseISpec, CaseIISpec, CaseIIISpec, OtsukiSpec>;

// A validated built-in family, dispatching to the concrete surface.
class Surface {
 public:
  using Impl = std::variant<PlaneSurface, CaseISurface, CaseIISurface, CaseIIISurface, OtsukiSurface>;

  explicit Surface(const FamilySpec& spec) : impl_(make(spec)) {}

  template <typename F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), impl_);
  }
  template <typename T>
  const T* as() const {
    return std::get_if<T>(&impl_);
  }

  std::string name() const {
    return visit([](const auto& s) { return s.name(); });
  }
  std::size_t dim() const {
    return visit([](const auto& s) { return s.dim(); });
  }
  const Rect& domain() const {
    return visit([](const auto& s) -> const Rect& { return s.domain(); });
  }
  bool clipped() const {
    return visit([](const auto& s) { return s.clipped(); });
  }
  SurfaceJet2 jet(const JetSource& source, double u, double v) const {
    return visit([&](const auto& s) { return jet_at(source, s, u, v); });
  }
  VecN position(double u, double v) const {
    return visit([&](const auto& s) { return VecN(s(u, v)); });
  }
  std::optional<NormalFrame> paper_frame(double u, double v) const {
    return visit([&](const auto& s) { return s.paper_frame(u, v); });
  }
  bool has_paper_frame() const { return !as<OtsukiSurface>(); }

 private:
  static Impl make(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Impl {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::same_as<S, PlaneSpec>) return PlaneSurface(s);
          else if constexpr (std::same_as<S, CaseISpec>) return CaseISurface(s);
          else if constexpr (std::same_as<S, CaseIISpec>) return CaseIISurface(s);
          else if constexpr (std::same_as<S, CaseIIISpec>) return CaseIIISurface(s);
          else return OtsukiSurface(s);
        },
        spec);
  }

  Impl impl_;
};

}  // namespace gss
