#pragma once
#include <string>

#include "mvbandit/instances.hpp"

namespace mvbandit {

// JSON text with one entry per arm: {"arms":[{"kind":...,...},...]}.
// Kinds: gaussian{mean,stddev}, truncated_gaussian{mean,stddev,r_max},
// bernoulli{p,lo,hi}, uniform{lo,hi}, discrete{values,probs}.
std::string instance_to_config(const BanditInstance& instance);
BanditInstance instance_from_config(const std::string& text);  // throws on bad input

void save_instance(const std::string& path, const BanditInstance& instance);
BanditInstance load_instance(const std::string& path);

}  // namespace mvbandit
