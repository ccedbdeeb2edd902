// Copyright 2026 The levyexit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "figures.hpp"

#include <cstdio>
#include <json.hpp>
#include <stdexcept>

namespace levyexit::cli {

namespace {

ProblemSpec base(double alpha, double beta, double b = 1.0, ProblemKind kind = ProblemKind::met) {
  ProblemSpec spec;
  spec.stable.alpha = alpha;
  spec.stable.beta = beta;
  spec.b = b;
  spec.kind = kind;
  return spec;
}

std::string label_of(const std::string& name, double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%s=%g", name.c_str(), value);
  return buffer;
}

std::string panel_name(const std::string& id, const std::string& suffix) { return id + "_" + suffix; }

// Curves over beta for fixed alpha and b.
FigurePanel beta_panel(const std::string& name, double alpha, const std::vector<double>& betas, double b,
                       ProblemKind kind) {
  FigurePanel panel{name, {}};
  for (double beta : betas) {
    panel.curves.push_back({label_of("beta", beta), base(alpha, beta, b, kind)});
  }
  return panel;
}

FigurePanel alpha_panel(const std::string& name, const std::vector<double>& alphas, double beta, double b,
                        ProblemKind kind) {
  FigurePanel panel{name, {}};
  for (double alpha : alphas) {
    panel.curves.push_back({label_of("alpha", alpha), base(alpha, beta, b, kind)});
  }
  return panel;
}

FigurePanel d_panel(const std::string& name, double alpha, ProblemKind kind) {
  FigurePanel panel{name, {}};
  for (double d : {0.0, 0.1, 1.0}) {
    ProblemSpec spec = base(alpha, 0.5, 1.0, kind);
    spec.d = d;
    panel.curves.push_back({label_of("d", d), spec});
  }
  return panel;
}

FigurePanel drift_panel(const std::string& name, double alpha, ProblemKind kind) {
  FigurePanel panel{name, {}};
  ProblemSpec ou = base(alpha, 0.5, 1.0, kind);
  ou.drift = DriftSpec::linear(-1.0);
  panel.curves.push_back({"f=-x", ou});
  panel.curves.push_back({"f=0", base(alpha, 0.5, 1.0, kind)});
  return panel;
}

const std::vector<double> kAlphas = {0.5, 1.0, 1.5};
const std::vector<double> kBetas = {0.0, 0.5, 1.0};

}  // namespace

std::vector<std::string> figure_ids() {
  return {"fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "fig12", "fig13"};
}

std::vector<FigurePanel> figure_panels(const std::string& id) {
  constexpr ProblemKind met = ProblemKind::met;
  constexpr ProblemKind esc = ProblemKind::escape_right;
  std::vector<FigurePanel> panels;
  if (id == "fig5" || id == "fig7") {
    // effect of beta for b = 1 and b = 4
    const double b = id == "fig5" ? 1.0 : 4.0;
    for (double alpha : kAlphas) {
      panels.push_back(beta_panel(panel_name(id, label_of("alpha", alpha)), alpha, kBetas, b, met));
    }
  } else if (id == "fig6") {
    panels.push_back(alpha_panel(panel_name(id, "beta=0.5"), {0.5, 1.5}, 0.5, 1.0, met));
  } else if (id == "fig8") {
    for (double alpha : {0.5, 1.5}) {
      panels.push_back(d_panel(panel_name(id, label_of("alpha", alpha)), alpha, met));
    }
  } else if (id == "fig9") {
    for (double alpha : {0.5, 1.5}) {
      FigurePanel panel{panel_name(id, label_of("alpha", alpha)), {}};
      for (double eps : {0.5, 1.0}) {
        ProblemSpec spec = base(alpha, 0.5);
        spec.eps = eps;
        panel.curves.push_back({label_of("eps", eps), spec});
      }
      panels.push_back(panel);
    }
  } else if (id == "fig10") {
    for (double alpha : {0.5, 1.5}) {
      panels.push_back(drift_panel(panel_name(id, label_of("alpha", alpha)), alpha, met));
    }
  } else if (id == "fig11") {
    panels.push_back(alpha_panel(panel_name(id, "a_b=1"), kAlphas, 0.0, 1.0, esc));
    panels.push_back(alpha_panel(panel_name(id, "b_b=4"), kAlphas, 0.0, 4.0, esc));
    panels.push_back(beta_panel(panel_name(id, "c_alpha=0.5"), 0.5, {-0.5, 0.0, 0.5}, 1.0, esc));
    panels.push_back(beta_panel(panel_name(id, "d_alpha=1.5"), 1.5, {-0.5, 0.0, 0.5}, 1.0, esc));
  } else if (id == "fig12") {
    for (double alpha : {0.5, 1.5}) {
      panels.push_back(d_panel(panel_name(id, label_of("alpha", alpha)), alpha, esc));
    }
  } else if (id == "fig13") {
    panels.push_back(drift_panel(panel_name(id, "alpha=0.5"), 0.5, esc));
  } else {
    throw std::invalid_argument("unknown figure id '" + id + "' (expected fig5 .. fig13)");
  }
  return panels;
}

std::string emit_panel(const FigurePanel& panel, const std::vector<SolutionProfile>& profiles,
                       OutputFormat format) {
  if (profiles.size() != panel.curves.size() || profiles.empty()) {
    throw std::invalid_argument("emit_panel: one profile per curve is required");
  }
  const std::vector<double>& x = profiles.front().x_nodes;
  if (format == OutputFormat::json) {
    nlohmann::json doc;
    doc["panel"] = panel.name;
    doc["kind"] = to_string(profiles.front().spec.kind);
    doc["J"] = profiles.front().J;
    doc["x"] = x;
    for (std::size_t c = 0; c < profiles.size(); ++c) {
      doc["curves"].push_back({{"label", panel.curves[c].label},
                               {"drift", panel.curves[c].spec.drift.to_string()},
                               {"values", profiles[c].values}});
    }
    return doc.dump(2) + "\n";
  }
  std::string text = "x";
  for (const FigureCurve& curve : panel.curves) {
    text += "," + curve.label;
  }
  text += "\n";
  char buffer[64];
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%.12g", x[i]);
    text += buffer;
    for (const SolutionProfile& profile : profiles) {
      std::snprintf(buffer, sizeof buffer, ",%.12g", profile.values[i]);
      text += buffer;
    }
    text += "\n";
  }
  return text;
}

}  // namespace levyexit::cli
