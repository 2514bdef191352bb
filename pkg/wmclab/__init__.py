from pathlib import Path
import sys

# Add libwmc to the Python path, pytest doesn't add it automatically
# from a parallel directory like this one.
sys.path.append(str(Path(__file__).parent / '..' / 'libwmc' / 'python'))
