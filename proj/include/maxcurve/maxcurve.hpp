// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include "maxcurve/common.hpp"
#include "maxcurve/field.hpp"
#include "maxcurve/bivariate.hpp"
#include "maxcurve/semigroup.hpp"
#include "maxcurve/curves.hpp"
#include "maxcurve/counting.hpp"
#include "maxcurve/bounds.hpp"
#include "maxcurve/audit.hpp"
