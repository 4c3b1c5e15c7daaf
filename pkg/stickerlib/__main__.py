# -*- coding: utf-8 -*-

import sys

from stickerlib.util.Cli import main

sys.exit(main())
