#pragma once

#include <string>
#include <string_view>

namespace bfaelm {

enum class Activation { Sigmoid, Tanh, Sine, Identity };

double apply_activation(Activation kind, double x);

std::string to_string(Activation kind);
Activation activation_from_string(std::string_view name);

}  // namespace bfaelm
