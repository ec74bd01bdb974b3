#pragma once

#include "wittlab/error.hpp"
#include "wittlab/tensor.hpp"
#include "wittlab/modp.hpp"
#include "wittlab/presentation.hpp"
#include "wittlab/group.hpp"
#include "wittlab/coset_enum.hpp"
#include "wittlab/subgroups.hpp"
#include "wittlab/isomorphism.hpp"
#include "wittlab/chartab.hpp"
#include "wittlab/fusion.hpp"
#include "wittlab/witt.hpp"
#include "wittlab/cocycle.hpp"
#include "wittlab/dump.hpp"
#include "wittlab/screen.hpp"
#include "wittlab/report.hpp"
