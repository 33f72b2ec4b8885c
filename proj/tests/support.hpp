#pragma once

#include "causalnet/io.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace causalnet::test {

inline std::string fixture_path(const std::string& name)
{
    return std::string(CAUSALNET_FIXTURE_DIR) + "/" + name;
}

template <class T>
T load(const std::string& name)
{
    return std::get<T>(parse_model_file(fixture_path(name)));
}

inline ContextualNet net(const std::string& name) { return load<ContextualNet>(name); }
inline Cdes cdes(const std::string& name) { return load<Cdes>(name); }

inline ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::parse;
}

inline Family family(std::initializer_list<EventSet> sets) { return Family(sets); }

}  // namespace causalnet::test
