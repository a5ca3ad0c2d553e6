#include "qtraj/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qtraj {

namespace {

const ordered_json& require(const ordered_json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError(key, "missing key \"" + key + "\"");
  return j.at(key);
}

double require_number(const ordered_json& j, const std::string& key) {
  const auto& v = require(j, key);
  if (!v.is_number()) throw ParseError(key, "key \"" + key + "\" must be a number");
  return v.get<double>();
}

c64 parse_complex(const ordered_json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ParseError(key, "key \"" + key + "\" must be [re, im]");
  return c64{v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

ScenarioFile parse_scenario(const ordered_json& j) {
  ScenarioFile sf;
  Scenario& s = sf.scenario;

  const auto& interaction = require(j, "interaction");
  if (interaction == "cnot")
    s.family.kind = GateKind::CNOT;
  else if (interaction == "swap")
    s.family.kind = GateKind::SWAP;
  else
    throw ParseError("interaction", "interaction must be \"cnot\" or \"swap\"");

  s.family.theta = require_number(j, "theta");
  s.dt = j.contains("dt") ? require_number(j, "dt") : 1.0;

  const auto& prep = require(j, "env_prep");
  if (prep == "zero") {
    s.prep = EnvPrep::zero();
  } else if (prep == "y_minus") {
    s.prep = EnvPrep::y_minus();
  } else if (prep.is_object() && prep.contains("mixed")) {
    const auto& w = prep.at("mixed");
    if (!w.is_array() || w.size() != 2)
      throw ParseError("env_prep.mixed", "mixed must be [w0, w1]");
    s.prep = EnvPrep::mixed(w[0].get<double>(), w[1].get<double>());
  } else {
    throw ParseError("env_prep",
                     "env_prep must be \"zero\", \"y_minus\" or {\"mixed\": [w0, w1]}");
  }

  const auto& meas = require(j, "env_meas");
  if (meas == "none") {
    s.meas = EnvMeas::none();
  } else if (meas.is_object() && meas.contains("basis")) {
    const auto& b = meas.at("basis");
    if (b == "z")
      s.meas = EnvMeas::basis_z();
    else if (b == "x")
      s.meas = EnvMeas::basis_x();
    else
      throw ParseError("env_meas.basis", "basis must be \"z\" or \"x\"");
  } else if (meas.is_object() && meas.contains("povm")) {
    const auto& p = meas.at("povm");
    const double q = require_number(meas, "q");
    if (p == "discrimination")
      s.meas = EnvMeas::discrimination(q);
    else if (p == "efficiency")
      s.meas = EnvMeas::efficiency(q);
    else
      throw ParseError("env_meas.povm", "povm must be \"discrimination\" or \"efficiency\"");
  } else {
    throw ParseError("env_meas", "env_meas must be {basis}, {povm, q} or \"none\"");
  }

  const auto& init = require(j, "init");
  if (init.is_object() && init.contains("alpha")) {
    const c64 alpha = parse_complex(require(init, "alpha"), "init.alpha");
    const c64 beta = parse_complex(require(init, "beta"), "init.beta");
    s.init = PureQbit::make(alpha, beta);
  } else if (init.is_object() && init.contains("bloch")) {
    const auto& b = init.at("bloch");
    if (!b.is_array() || b.size() != 3)
      throw ParseError("init.bloch", "bloch must be [theta, phi, r]");
    const double r = b[2].get<double>();
    if (std::abs(r - 1.0) <= tol::construct)
      s.init = pure_from_bloch(b[0].get<double>(), b[1].get<double>());
    else
      s.init = mixed_from_bloch(b[0].get<double>(), b[1].get<double>(), r);
  } else {
    throw ParseError("init", "init must carry {alpha, beta} or {bloch}");
  }

  const auto& steps = require(j, "steps");
  if (!steps.is_number_integer() || steps.get<long long>() < 0)
    throw ParseError("steps", "steps must be a nonnegative integer");
  s.steps = steps.get<int>();

  const auto& traj = require(j, "trajectories");
  if (!traj.is_number_integer() || traj.get<long long>() < 1)
    throw ParseError("trajectories", "trajectories must be a positive integer");
  sf.trajectories = traj.get<int>();

  const auto& seed = require(j, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    throw ParseError("seed", "seed must be an unsigned 64-bit integer");
  sf.seed = seed.get<std::uint64_t>();

  s.validate();
  return sf;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open scenario file " + path.string());
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("(document)", e.what());
  }
  return parse_scenario(j);
}

ordered_json scenario_to_json(const ScenarioFile& sf) {
  const Scenario& s = sf.scenario;
  ordered_json j;
  j["interaction"] = s.family.kind == GateKind::CNOT ? "cnot" : "swap";
  j["theta"] = s.family.theta;
  j["dt"] = s.dt;
  if (s.prep.kind == EnvPrep::Kind::Diagonal) {
    j["env_prep"] = ordered_json{{"mixed", {s.prep.w0, s.prep.w1}}};
  } else if (std::abs(s.prep.state[0] - c64{1.0, 0.0}) < 1e-14 &&
             std::abs(s.prep.state[1]) < 1e-14) {
    j["env_prep"] = "zero";
  } else {
    j["env_prep"] = "y_minus";
  }
  switch (s.meas.kind) {
    case EnvMeas::Kind::BasisZ: j["env_meas"] = ordered_json{{"basis", "z"}}; break;
    case EnvMeas::Kind::BasisX: j["env_meas"] = ordered_json{{"basis", "x"}}; break;
    case EnvMeas::Kind::Discrimination:
      j["env_meas"] = ordered_json{{"povm", "discrimination"}, {"q", s.meas.q}};
      break;
    case EnvMeas::Kind::Efficiency:
      j["env_meas"] = ordered_json{{"povm", "efficiency"}, {"q", s.meas.q}};
      break;
    case EnvMeas::Kind::None: j["env_meas"] = "none"; break;
  }
  if (std::holds_alternative<PureQbit>(s.init)) {
    const auto& psi = std::get<PureQbit>(s.init);
    j["init"] = ordered_json{{"alpha", {psi.alpha.real(), psi.alpha.imag()}},
                             {"beta", {psi.beta.real(), psi.beta.imag()}}};
  } else {
    const BlochPoint b = bloch_of(std::get<DensityMatrix>(s.init));
    j["init"] = ordered_json{{"bloch", {b.theta, b.phi, b.r}}};
  }
  j["steps"] = s.steps;
  j["trajectories"] = sf.trajectories;
  j["seed"] = sf.seed;
  return j;
}

ordered_json state_to_json(const State& s) {
  ordered_json j;
  if (std::holds_alternative<PureQbit>(s)) {
    const auto& psi = std::get<PureQbit>(s);
    j["alpha"] = {psi.alpha.real(), psi.alpha.imag()};
    j["beta"] = {psi.beta.real(), psi.beta.imag()};
  } else {
    const auto& rho = std::get<DensityMatrix>(s);
    j["rho00"] = rho.m(0, 0).real();
    j["rho01"] = {rho.m(0, 1).real(), rho.m(0, 1).imag()};
    j["rho11"] = rho.m(1, 1).real();
  }
  return j;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string trajectory_csv(const std::vector<TrajectoryRecord>& records,
                           bool pure_mode,
                           const std::vector<std::string>& header_comments) {
  std::ostringstream out;
  for (const auto& c : header_comments) out << "# " << c << "\n";
  if (pure_mode)
    out << "traj,step,outcome,prob,re_a,im_a,re_b,im_b,beta_sq\n";
  else
    out << "traj,step,outcome,prob,rho00,re_rho01,im_rho01,rho11,purity\n";

  auto emit_state = [&](const State& s) {
    if (pure_mode) {
      const auto& psi = std::get<PureQbit>(s);
      out << format_double(psi.alpha.real()) << ',' << format_double(psi.alpha.imag())
          << ',' << format_double(psi.beta.real()) << ','
          << format_double(psi.beta.imag()) << ',' << format_double(psi.beta_sq());
    } else {
      const auto& rho = std::get<DensityMatrix>(s);
      out << format_double(rho.m(0, 0).real()) << ','
          << format_double(rho.m(0, 1).real()) << ','
          << format_double(rho.m(0, 1).imag()) << ','
          << format_double(rho.m(1, 1).real()) << ',' << format_double(rho.purity());
    }
  };

  for (std::size_t t = 0; t < records.size(); ++t) {
    const auto& rec = records[t];
    out << t << ",0,-,1,";
    emit_state(rec.initial);
    out << "\n";
    for (std::size_t k = 0; k < rec.steps.size(); ++k) {
      const auto& st = rec.steps[k];
      out << t << ',' << (k + 1) << ',' << st.outcome << ','
          << format_double(st.probability) << ',';
      emit_state(st.post);
      out << "\n";
    }
  }
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw std::ios_base::failure("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::ios_base::failure("cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace qtraj
