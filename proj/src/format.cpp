#include "bfaelm/format.hpp"

#include <charconv>
#include <stdexcept>

namespace bfaelm {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

}  // namespace bfaelm
