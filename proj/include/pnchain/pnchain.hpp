#pragma once

// Umbrella header.

#include "pnchain/audit.hpp"
#include "pnchain/chain.hpp"
#include "pnchain/enumeration.hpp"
#include "pnchain/extension.hpp"
#include "pnchain/graph.hpp"
#include "pnchain/swap.hpp"
#include "pnchain/version.hpp"
#include "pnchain/word.hpp"
