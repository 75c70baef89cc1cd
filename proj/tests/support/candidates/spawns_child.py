import subprocess
import sys

CHILD = subprocess.Popen([sys.executable, "-c", "import time; time.sleep(600)"])


def map_to_coordinates(n):
    while True:
        pass
