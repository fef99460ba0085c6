# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

import unirational


def test_main():
    assert unirational is not None
    assert unirational.__version__ == unirational._version.version
