#!/usr/bin/env python3
"""
Eulerian triangulation slice engine
Exact two-point functions and hull-perimeter statistics
"""

import logging
import os
import sys
from pathlib import Path


def setup_logging():
    """Setup application logging"""
    handlers = [logging.StreamHandler()]
    log_file = os.environ.get("EULERIAN_SLICES_LOG")
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=os.environ.get("EULERIAN_SLICES_LOG_LEVEL", "WARNING"),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
    )


def main(argv=None):
    """Main application entry point"""
    setup_logging()

    # Add src directory to path
    src_path = Path(__file__).parent / 'src'
    sys.path.insert(0, str(src_path))

    from ui.cli import run
    return run(argv)


if __name__ == '__main__':
    sys.exit(main())
