#include "bfaelm/activation.hpp"

#include <cmath>
#include <stdexcept>

namespace bfaelm {

double apply_activation(Activation kind, double x) {
    switch (kind) {
        case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-x));
        case Activation::Tanh: return std::tanh(x);
        case Activation::Sine: return std::sin(x);
        case Activation::Identity: return x;
    }
    throw std::invalid_argument("apply_activation: unknown kind");
}

std::string to_string(Activation kind) {
    switch (kind) {
        case Activation::Sigmoid: return "sigmoid";
        case Activation::Tanh: return "tanh";
        case Activation::Sine: return "sine";
        case Activation::Identity: return "identity";
    }
    throw std::invalid_argument("to_string: unknown activation");
}

Activation activation_from_string(std::string_view name) {
    if (name == "sigmoid") return Activation::Sigmoid;
    if (name == "tanh") return Activation::Tanh;
    if (name == "sine") return Activation::Sine;
    if (name == "identity") return Activation::Identity;
    throw std::invalid_argument("unknown activation: " + std::string(name));
}

}  // namespace bfaelm
