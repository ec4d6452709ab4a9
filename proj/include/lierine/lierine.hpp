/*
 * lierine.hpp
 * -----------
 * Umbrella header: the full symbolic kernel, example catalog, definition
 * DSL, and acceptance suite (everything except the CLI front end).
 */
#pragma once

#include "acceptance.hpp"
