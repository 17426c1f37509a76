#pragma once

// Command implementations behind the tightrep CLI. Each returns the process
// exit code: 0 ran (verdicts are data), 1 input or validation error,
// 2 internal invariant breach.

#include <cstddef>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tightrep/enumeration.hpp"
#include "tightrep/error.hpp"
#include "tightrep/inverse_semigroup.hpp"
#include "tightrep/lattice.hpp"
#include "tightrep/representation.hpp"
#include "tightrep/structure_file.hpp"

namespace tightrep {

enum class ViewKind { full, generated_ideal, tightened };

inline ViewKind parse_view(std::string const& text) {
  if (text == "full") return ViewKind::full;
  if (text == "generated-ideal") return ViewKind::generated_ideal;
  if (text == "tightened") return ViewKind::tightened;
  throw precondition_error("unknown view '" + text + "' (expected full, generated-ideal or tightened)");
}

inline char const* view_name(ViewKind v) {
  switch (v) {
    case ViewKind::full:
      return "full";
    case ViewKind::generated_ideal:
      return "generated-ideal";
    case ViewKind::tightened:
      return "tightened";
  }
  return "?";
}

inline char const* verdict_text(bool pass) { return pass ? "pass" : "fail"; }

inline void render_cover_to_join(std::ostream& out, Representation const& rep, Verdict<CoverToJoinWitness> const& v) {
  out << "cover_to_join: " << verdict_text(v.passed()) << '\n';
  if (auto const& w = v.failure) {
    out << "witness_x: " << rep.domain().name(w->x) << '\n'
        << "witness_Z: " << rep.domain().render(w->cover) << '\n'
        << "witness_join: " << rep.algebra().name(w->join) << '\n';
  }
}

/// Report lines for the three verdicts, witnesses following each failure.
inline void render_report(std::ostream& out, Representation const& rep, TightnessReport const& report) {
  auto const& e = rep.domain();
  auto const& alg = rep.algebra();
  render_cover_to_join(out, rep, report.cover_to_join);
  out << "tight: " << verdict_text(report.tight.passed()) << '\n';
  if (auto const& w = report.tight.failure) {
    out << "witness_X: " << e.render(w->xs) << '\n'
        << "witness_Y: " << e.render(w->ys) << '\n'
        << "witness_Z: " << e.render(w->cover) << '\n'
        << "witness_lhs: " << alg.name(w->lhs) << '\n'
        << "witness_rhs: " << alg.name(w->rhs) << '\n';
  }
  out << "nondegenerate: " << verdict_text(report.nondegenerate.passed()) << '\n';
  if (auto const& w = report.nondegenerate.failure) out << "witness_a: " << alg.name(w->outside) << '\n';
}

namespace detail {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (internal_error const& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

inline Representation view_of(Representation const& rep, ViewKind view, std::ostream& out) {
  switch (view) {
    case ViewKind::full:
      return rep.with_codomain(IdealView::full(rep.algebra()));
    case ViewKind::generated_ideal:
      return restrict_to_generated_ideal(rep);
    case ViewKind::tightened: {
      auto ctj = is_cover_to_join(rep);
      if (!ctj) {
        render_cover_to_join(out, rep, ctj);
        throw precondition_error("the tightened view needs a cover-to-join representation");
      }
      return tighten(rep).representation;
    }
  }
  return rep;
}

}  // namespace detail

inline int cmd_validate(std::string const& path, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto file = read_structure_file(path);
    if (file.empty()) throw error("no structures");
    out << "ok: " << file.size() << " structures\n";
    return 0;
  });
}

inline int cmd_check(std::string const& path, std::string const& name, std::string const& view_text, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded(err, [&] {
    auto view = parse_view(view_text);
    auto file = read_structure_file(path);
    Representation rep;
    if (auto const* r = file.get<RepresentationBlock>(name)) {
      out << "representation: " << name << '\n';
      rep = r->value;
    } else if (auto const* h = file.get<HomomorphismBlock>(name)) {
      out << "homomorphism: " << name << '\n';
      rep = restrict_to_idempotents(h->value);
    } else {
      throw error("unknown representation '" + name + "'");
    }
    auto viewed = detail::view_of(rep, view, out);
    auto const& cod = viewed.codomain();
    out << "view: " << view_name(view) << '\n'
        << "view_top: " << cod.parent().name(cod.top()) << '\n'
        << "view_members: " << cod.parent().render(cod.members()) << '\n';
    render_report(out, viewed, check(viewed));
    return 0;
  });
}

inline int cmd_tighten(std::string const& path, std::string const& name, std::string const& out_path, std::ostream& out,
                       std::ostream& err) {
  return detail::guarded(err, [&] {
    auto file = read_structure_file(path);
    std::ostringstream text;
    if (auto const* r = file.get<RepresentationBlock>(name)) {
      auto const& rep = r->value;
      auto ctj = is_cover_to_join(rep);
      if (!ctj) {
        render_cover_to_join(out, rep, ctj);
        throw precondition_error("representation '" + name + "' is not cover-to-join");
      }
      auto t = tighten(rep);
      auto corner = t.codomain.materialize();
      std::string const alg_name = r->codomain + "_tight";
      std::string const rep_name = name + "_tight";
      render_semilattice(text, r->domain, rep.domain());
      text << '\n';
      render_algebra(text, alg_name, corner);
      text << '\n';
      std::vector<element> map;
      for (auto v : rep.images()) map.push_back(corner.index_of(rep.algebra().name(v)));
      render_representation(text, rep_name, r->domain, alg_name,
                            validate_representation(rep.domain(), corner, std::move(map)));
      out << "unit: " << rep.algebra().name(t.unit) << '\n'
          << "corner: " << rep.algebra().render(t.codomain.members()) << '\n';
    } else if (auto const* h = file.get<HomomorphismBlock>(name)) {
      auto const& hom = h->value;
      auto restricted = restrict_to_idempotents(hom);
      auto ctj = is_cover_to_join(restricted);
      if (!ctj) {
        render_cover_to_join(out, restricted, ctj);
        throw precondition_error("homomorphism '" + name + "' is not cover-to-join");
      }
      auto c = tighten_homomorphism(hom);
      std::string const sg_name = h->codomain + "_tight";
      render_semigroup(text, h->domain, hom.domain());
      text << '\n';
      render_semigroup(text, sg_name, c.corner);
      text << '\n';
      render_homomorphism(text, name + "_tight", h->domain, sg_name, c.homomorphism);
      out << "unit: " << hom.codomain().name(c.unit) << '\n'
          << "corner: " << hom.codomain().render(ElementSet::of(c.in_codomain)) << '\n';
    } else {
      throw error("unknown representation '" + name + "'");
    }
    std::ofstream file_out(out_path);
    if (!file_out) throw error("cannot write '" + out_path + "'");
    file_out << text.str();
    return 0;
  });
}

inline int cmd_enumerate(std::size_t n, bool up_to_iso, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    std::size_t count = 0;
    for_each_semilattice(n, up_to_iso, [&](FiniteMeetSemilattice const& e) {
      if (count) out << '\n';
      render_semilattice(out, "L" + std::to_string(++count), e);
      return true;
    });
    out << "# count: " << count << '\n';
    return 0;
  });
}

inline int cmd_search_gap(UniverseSpec const& spec, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    std::size_t count = 0;
    search_gap(spec, [&](GapExample const& gap) {
      std::string const prefix = "gap" + std::to_string(++count) + "_";
      if (count > 1) out << '\n';
      render_semilattice(out, prefix + "E", gap.semilattice);
      out << '\n';
      render_algebra(out, prefix + "B", gap.algebra);
      out << '\n';
      render_representation(out, prefix + "pi", prefix + "E", prefix + "B", gap.representation);
      std::ostringstream report;
      render_report(report, gap.representation, gap.report);
      std::istringstream lines(report.str());
      for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
      return true;
    });
    out << "# gaps: " << count << '\n';
    return 0;
  });
}

inline int cmd_verify(UniverseSpec const& spec, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto s = verify_theorems(spec);
    out << "semilattices: " << s.semilattices << '\n'
        << "representations: " << s.representations << '\n'
        << "cover_to_join: " << s.cover_to_join << '\n'
        << "tight: " << s.tight << '\n'
        << "nondegenerate: " << s.nondegenerate << '\n'
        << "gaps: " << s.gaps << '\n'
        << "violations: " << s.violations << '\n';
    if (s.first_violation) {
      out << "first_violation: " << *s.first_violation << '\n';
      return 1;
    }
    return 0;
  });
}

}  // namespace tightrep
