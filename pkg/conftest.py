import os
import sys

# The unit tests import the shared result collector from qa/common
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'qa', 'common'))
