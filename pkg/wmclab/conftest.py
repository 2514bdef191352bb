from pathlib import Path
import sys

# Add libwmc to the Python path, pytest does not find it from a
# parallel directory like this one.
sys.path.append(str(Path(__file__).parent / '..' / 'libwmc' / 'python'))
