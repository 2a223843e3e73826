#ifndef TORISOL_ERRORS_HPP
#define TORISOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torisol {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_params : public error {
public:
    using error::error;
};

class unsupported_dimension : public error {
public:
    using error::error;
};

class not_in_kernel : public error {
public:
    using error::error;
};

class wrong_rank : public error {
public:
    using error::error;
};

class wrong_count : public error {
public:
    using error::error;
};

class not_prenormalized : public error {
public:
    using error::error;
};

class out_of_range_shift : public error {
public:
    using error::error;
};

class no_solution : public error {
public:
    using error::error;
};

class is_generator : public error {
public:
    using error::error;
};

class rank_too_high : public error {
public:
    using error::error;
};

class search_budget_exceeded : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

}  // namespace torisol

#endif
