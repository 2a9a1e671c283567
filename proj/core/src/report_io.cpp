// SPDX-License-Identifier: Apache-2.0
#include "opiallab/report_io.hpp"

#include <sstream>

namespace opiallab::report_io {

Json envelope(std::string_view kind, const Json& body) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = std::string(kind);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

Json to_json(const inequalities::CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["constant"] = r.constant;
  j["ratio"] = r.ratio;
  j["holds"] = r.holds;
  j["margin"] = r.margin;
  return j;
}

Json to_json(const variational::ConstantReport& r) {
  Json j;
  j["p"] = r.p;
  j["L"] = r.length;
  j["c_maximized"] = r.c_maximized;
  j["c_closed_form"] = r.c_closed_form;
  j["c_paper_printed"] = r.c_paper_printed;
  j["rel_diff_max_closed"] = r.rel_diff_max_closed;
  j["rel_diff_max_printed"] = r.rel_diff_max_printed;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  Json maximizer;
  maximizer["length"] = r.maximizer.length();
  maximizer["values"] = Json(std::vector<double>(r.maximizer.values().begin(),
                                                 r.maximizer.values().end()));
  j["maximizer"] = std::move(maximizer);
  return j;
}

Json extremal_sidecar(const emdenfowler::ExtremalProfile& e) {
  Json j;
  j["p"] = e.p;
  j["L"] = e.length;
  j["mu"] = e.mu;
  j["A"] = e.amplitude;
  j["E"] = e.energy;
  j["F"] = e.nonlinear_mass;
  j["n"] = e.profile.intervals();
  j["ode_residual"] = e.residuals.ode;
  j["energy_identity_residual"] = e.residuals.energy_identity;
  j["boundary_residual"] = e.residuals.boundary;
  return j;
}

std::string format_number(double value) { return Json(value).dump(); }

std::string check_csv_header() { return "name,lhs,rhs,constant,ratio,holds,margin"; }

std::string check_csv_row(const inequalities::CheckReport& r) {
  std::ostringstream out;
  out << r.name << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
      << format_number(r.constant) << ',' << format_number(r.ratio) << ','
      << (r.holds ? "true" : "false") << ',' << format_number(r.margin);
  return out.str();
}

std::string constant_csv_header() {
  return "p,L,c_maximized,c_closed_form,c_paper_printed,rel_diff_max_closed,rel_diff_max_printed,"
         "iterations,converged";
}

std::string constant_csv_row(const variational::ConstantReport& r) {
  std::ostringstream out;
  out << format_number(r.p) << ',' << format_number(r.length) << ','
      << format_number(r.c_maximized) << ',' << format_number(r.c_closed_form) << ','
      << format_number(r.c_paper_printed) << ',' << format_number(r.rel_diff_max_closed) << ','
      << format_number(r.rel_diff_max_printed) << ',' << r.iterations << ','
      << (r.converged ? "true" : "false");
  return out.str();
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace opiallab::report_io
