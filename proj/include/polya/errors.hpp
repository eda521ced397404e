#pragma once

#include <stdexcept>
#include <string>
#include <utility>

// Domain error types. Each carries a stable name() so the CLI can surface
// failures as "<Name>: <detail>" without string-matching what() text.

namespace polya {

class UrnError : public std::runtime_error {
public:
    UrnError(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// build_model rejections
class BalanceViolation : public UrnError {
public:
    explicit BalanceViolation(const std::string& d) : UrnError("BalanceViolation", d) {}
};
class EmptyUrn : public UrnError {
public:
    explicit EmptyUrn(const std::string& d) : UrnError("EmptyUrn", d) {}
};
class ZeroGrowth : public UrnError {
public:
    explicit ZeroGrowth(const std::string& d) : UrnError("ZeroGrowth", d) {}
};

// closed-form evaluation
class GammaPole : public UrnError {
public:
    explicit GammaPole(const std::string& d) : UrnError("GammaPole", d) {}
};
class RegimeMismatch : public UrnError {
public:
    explicit RegimeMismatch(const std::string& d) : UrnError("RegimeMismatch", d) {}
};
class DegenerateUrn : public UrnError {
public:
    explicit DegenerateUrn(const std::string& d) : UrnError("DegenerateUrn", d) {}
};

// simulation / verification harness
class OverflowHorizon : public UrnError {
public:
    explicit OverflowHorizon(const std::string& d) : UrnError("OverflowHorizon", d) {}
};
class DegenerateProxy : public UrnError {
public:
    explicit DegenerateProxy(const std::string& d) : UrnError("DegenerateProxy", d) {}
};
class TooLarge : public UrnError {
public:
    explicit TooLarge(const std::string& d) : UrnError("TooLarge", d) {}
};

} // namespace polya
