// Copyright 2026 The compnet Authors
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

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "compnet/lp.hpp"

namespace compnet::lp {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
    case Status::kIterationLimit:
      return "iteration-limit";
    case Status::kNodeLimit:
      return "node-limit";
    case Status::kTimeLimit:
      return "time-limit";
  }
  return "unknown";
}

int LinearProgram::add_variable(std::string name, double lower, double upper,
                                bool integral) {
  variables_.push_back({std::move(name), lower, upper, integral});
  objective_.push_back(0.0);
  return static_cast<int>(variables_.size()) - 1;
}

int LinearProgram::add_constraint(std::string name, std::vector<Term> terms,
                                  Relation relation, double rhs) {
  constraints_.push_back({std::move(name), std::move(terms), relation, rhs});
  return static_cast<int>(constraints_.size()) - 1;
}

void LinearProgram::set_objective_coefficient(int var, double coef) {
  objective_.at(var) = coef;
}

void LinearProgram::set_bounds(int var, double lower, double upper) {
  Variable& v = variables_.at(var);
  v.lower = lower;
  v.upper = upper;
}

bool LinearProgram::has_integral_variables() const {
  for (const Variable& v : variables_) {
    if (v.integral) return true;
  }
  return false;
}

void LinearProgram::validate() const {
  for (const Variable& v : variables_) {
    if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower > v.upper ||
        v.lower == kInfinity || v.upper == -kInfinity) {
      throw std::invalid_argument("variable '" + v.name +
                                  "' has invalid bounds");
    }
  }
  for (double c : objective_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("objective has a non-finite coefficient");
    }
  }
  for (const Constraint& c : constraints_) {
    if (!std::isfinite(c.rhs)) {
      throw std::invalid_argument("constraint '" + c.name +
                                  "' has a non-finite right-hand side");
    }
    for (const Term& t : c.terms) {
      if (t.var < 0 || t.var >= num_variables()) {
        throw std::invalid_argument("constraint '" + c.name +
                                    "' references an unknown variable");
      }
      if (!std::isfinite(t.coef)) {
        throw std::invalid_argument("constraint '" + c.name +
                                    "' has a non-finite coefficient");
      }
    }
  }
}

namespace {

void append_terms(std::ostringstream& out, const LinearProgram& lp,
                  const std::vector<Term>& terms) {
  if (terms.empty()) {
    out << " 0";
    return;
  }
  for (const Term& t : terms) {
    out << (t.coef < 0 ? " - " : " + ") << std::abs(t.coef) << ' '
        << lp.variables()[t.var].name;
  }
}

}  // namespace

std::string to_lp_text(const LinearProgram& lp) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(12);
  out << (lp.sense() == Sense::kMaximize ? "Maximize" : "Minimize") << '\n';
  std::vector<Term> obj;
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (lp.objective()[j] != 0.0) obj.push_back({j, lp.objective()[j]});
  }
  out << "  obj:";
  append_terms(out, lp, obj);
  out << "\nSubject To\n";
  for (const Constraint& c : lp.constraints()) {
    out << "  " << c.name << ':';
    append_terms(out, lp, c.terms);
    switch (c.relation) {
      case Relation::kLessEqual:
        out << " <= ";
        break;
      case Relation::kEqual:
        out << " = ";
        break;
      case Relation::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << c.rhs << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : lp.variables()) {
    out << "  ";
    if (v.lower == -kInfinity) {
      out << "-inf";
    } else {
      out << v.lower;
    }
    out << " <= " << v.name << " <= ";
    if (v.upper == kInfinity) {
      out << "inf";
    } else {
      out << v.upper;
    }
    out << '\n';
  }
  bool any_integral = false;
  for (const Variable& v : lp.variables()) {
    if (!v.integral) continue;
    if (!any_integral) out << "Generals\n";
    any_integral = true;
    out << "  " << v.name << '\n';
  }
  out << "End\n";
  return out.str();
}

}  // namespace compnet::lp
