#include "mvbandit/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mvbandit {

using nlohmann::json;

std::string instance_to_config(const BanditInstance& instance) {
  json arms = json::array();
  for (const auto& arm : instance.arms()) {
    json a;
    std::visit(
        [&a](const auto& d) {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, Gaussian>) {
            a = {{"kind", "gaussian"}, {"mean", d.mean}, {"stddev", d.stddev}};
          } else if constexpr (std::is_same_v<T, TruncatedGaussian>) {
            a = {{"kind", "truncated_gaussian"},
                 {"mean", d.mean},
                 {"stddev", d.stddev},
                 {"r_max", d.r_max}};
          } else if constexpr (std::is_same_v<T, Bernoulli>) {
            a = {{"kind", "bernoulli"}, {"p", d.p}, {"lo", d.lo}, {"hi", d.hi}};
          } else if constexpr (std::is_same_v<T, Uniform>) {
            a = {{"kind", "uniform"}, {"lo", d.lo}, {"hi", d.hi}};
          } else {
            static_assert(std::is_same_v<T, DiscreteFinite>);
            a = {{"kind", "discrete"}, {"values", d.values}, {"probs", d.probs}};
          }
        },
        arm.params());
    arms.push_back(std::move(a));
  }
  return json{{"arms", std::move(arms)}}.dump(2);
}

BanditInstance instance_from_config(const std::string& text) {
  const json j = json::parse(text);
  if (!j.contains("arms") || !j["arms"].is_array())
    throw std::invalid_argument("instance config: missing arms array");
  std::vector<RewardDistribution> arms;
  for (const auto& a : j["arms"]) {
    const std::string kind = a.at("kind").get<std::string>();
    if (kind == "gaussian") {
      arms.emplace_back(Gaussian{a.at("mean").get<double>(), a.at("stddev").get<double>()});
    } else if (kind == "truncated_gaussian") {
      arms.emplace_back(TruncatedGaussian{a.at("mean").get<double>(), a.at("stddev").get<double>(),
                                          a.at("r_max").get<double>()});
    } else if (kind == "bernoulli") {
      arms.emplace_back(
          Bernoulli{a.at("p").get<double>(), a.at("lo").get<double>(), a.at("hi").get<double>()});
    } else if (kind == "uniform") {
      arms.emplace_back(Uniform{a.at("lo").get<double>(), a.at("hi").get<double>()});
    } else if (kind == "discrete") {
      arms.emplace_back(DiscreteFinite{a.at("values").get<std::vector<double>>(),
                                       a.at("probs").get<std::vector<double>>()});
    } else {
      throw std::invalid_argument("instance config: unknown arm kind " + kind);
    }
  }
  return BanditInstance(std::move(arms));
}

void save_instance(const std::string& path, const BanditInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << instance_to_config(instance) << '\n';
}

BanditInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_config(buf.str());
}

}  // namespace mvbandit
