// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef SUPERSTRING_SUPERSTRING_HPP
#define SUPERSTRING_SUPERSTRING_HPP

#include <superstring/bounds.hpp>
#include <superstring/core.hpp>
#include <superstring/euler.hpp>
#include <superstring/graph.hpp>
#include <superstring/hierarchy.hpp>
#include <superstring/io.hpp>
#include <superstring/oracle.hpp>

#endif
